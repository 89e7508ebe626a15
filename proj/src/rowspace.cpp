#include "sympair/rowspace.hpp"

#include <algorithm>

#include "sympair/errors.hpp"

namespace sympair {

RowSpace::RowSpace(int p, int cols) : p_(p), cols_(cols), inverse_(static_cast<std::size_t>(p), 0) {
  for (int a = 1; a < p; ++a) {
    for (int b = 1; b < p; ++b) {
      if (a * b % p == 1) inverse_[static_cast<std::size_t>(a)] = b;
    }
  }
}

void RowSpace::axpy(Row& target, const Row& source, int factor) const {
  if (factor == 0) return;
  for (int c = 0; c < cols_; ++c) {
    if (source[c] != 0) target[c] = static_cast<std::uint16_t>((target[c] + factor * source[c]) % p_);
  }
}

RowSpace::Row RowSpace::reduce(std::span<const std::uint16_t> v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorKind::RingMismatch, "vector length differs from the space");
  Row r(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int c = r[static_cast<std::size_t>(pivots_[k])];
    if (c != 0) axpy(r, rows_[k], p_ - c);
  }
  return r;
}

bool RowSpace::contains(std::span<const std::uint16_t> v) const {
  const Row r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint16_t x) { return x == 0; });
}

bool RowSpace::contains(const RowSpace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Row& r) { return contains(r); });
}

bool RowSpace::insert(std::span<const std::uint16_t> row) {
  Row r = reduce(row);
  auto it = std::find_if(r.begin(), r.end(), [](std::uint16_t x) { return x != 0; });
  if (it == r.end()) return false;
  const int pivot = static_cast<int>(it - r.begin());
  const int scale = inverse_[*it];
  for (auto& x : r) x = static_cast<std::uint16_t>(x * scale % p_);
  // Clear the new pivot column from existing rows.
  for (auto& existing : rows_) {
    const int c = existing[static_cast<std::size_t>(pivot)];
    if (c != 0) axpy(existing, r, p_ - c);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

}  // namespace sympair
