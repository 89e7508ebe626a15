#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sympair/codes.hpp"

namespace sympair {

/// A read-back symbol; 0 is the zero symbol.
using Symbol = std::uint32_t;
using PairVector = std::vector<std::pair<Symbol, Symbol>>;

/// ((x_0, x_1), (x_1, x_2), ..., (x_{N-1}, x_0)).
PairVector pair_vector(std::span<const Symbol> x);

int wt_H(std::span<const Symbol> x);
/// |{i : (x_i, x_{i+1 mod N}) != (0, 0)}|
int wt_sp(std::span<const Symbol> x);
int d_H(std::span<const Symbol> x, std::span<const Symbol> y);
int d_sp(std::span<const Symbol> x, std::span<const Symbol> y);

int wt_H(const QPoly& f);
int wt_sp(const QPoly& f);

struct BlockDecomposition {
  int d_H = 0;
  /// Maximal cyclic runs of differing positions.
  int L = 0;
  int d_sp = 0;
};

/// Requires 0 < d_H(x, y) < N; throws DegenerateInput otherwise.
BlockDecomposition block_decomposition(std::span<const Symbol> x, std::span<const Symbol> y);

enum class Metric { Pair, Hamming };
enum class DistanceMethod { ClosedForm, Exhaustive, UpperBound };

std::string to_string(DistanceMethod method);

struct DistanceReport {
  int d_sp = 0;
  int d_H = 0;
  DistanceMethod method = DistanceMethod::Exhaustive;
  /// Minimum-weight codeword for the requested metric (first in enumeration order).
  std::optional<QPoly> witness;
  /// Block count of the witness when 0 < wt_H(witness) < N.
  std::optional<int> L;
  std::uint64_t examined = 0;
};

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Random codewords drawn when the code exceeds the budget.
  std::uint64_t samples = 4096;
  std::uint64_t seed = 1;
};

/// Minimum pair and Hamming weights over all nonzero codewords. Exact when
/// p^dim_p <= budget; otherwise an upper bound from generators, basis rows and
/// random samples.
DistanceReport min_distance_brute(const ConstacyclicCode& code, Metric metric, const OracleOptions& options = {});

nlohmann::json to_json(const DistanceReport& report);

}  // namespace sympair
