#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sympair {

/// A subspace of GF(p)^cols kept in reduced row echelon form. Rows are inserted
/// one at a time; a row that reduces to zero is discarded.
class RowSpace {
 public:
  using Row = std::vector<std::uint16_t>;

  RowSpace(int p, int cols);

  int p() const noexcept { return p_; }
  int cols() const noexcept { return cols_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  /// Returns true if the row enlarged the space.
  bool insert(std::span<const std::uint16_t> row);
  /// The residue of v after elimination against the basis; zero iff v is in the space.
  Row reduce(std::span<const std::uint16_t> v) const;
  bool contains(std::span<const std::uint16_t> v) const;
  /// Every basis row of other lies in this space.
  bool contains(const RowSpace& other) const;

 private:
  void axpy(Row& target, const Row& source, int factor) const;

  int p_;
  int cols_;
  std::vector<int> inverse_;
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

}  // namespace sympair
