#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympair/codes.hpp"
#include "sympair/pairmetric.hpp"

namespace sympair {

/// Which closed-form branch produced a distance. For 1 <= i <= p^s - 1 the
/// exponent is located as i = p^s - p^(s-k) + theta p^(s-k-1) + gamma with
/// 1 <= gamma <= p^(s-k-1).
struct BranchWitness {
  std::string branch;
  int k = -1;
  int theta = -1;
  int gamma = -1;
  int value = 0;
};

struct IntervalPosition {
  int k = 0;
  int theta = 0;
  int gamma = 0;
};

/// Position of 1 <= i <= p^s - 1 in the s(p-1) intervals.
IntervalPosition locate_exponent(int p, int s, int i);

/// Hamming weight of (x^n - alpha0)^i from the p-adic digits of i, 0 <= i < p^s.
int wtH_binom_power(int p, int s, int i);

/// Minimum Hamming distance of C_i, 0 <= i <= p^s.
int dH_formula(int p, int s, int i);

/// Every branch of the field pair-distance characterisation whose interval
/// contains i. Exactly one is expected.
std::vector<BranchWitness> field_branches(int n, int p, int s, int i);

/// Pair distance of C_i over GF(p^m).
BranchWitness dsp_formula_field(int n, int p, int s, int i);

struct ChainFormula {
  int value = 0;
  /// The field exponent whose code carries the distance; nullopt for the
  /// constant branch (D_i with i <= p^s, beta != 0).
  std::optional<int> field_exponent;
  BranchWitness branch;
};

/// Closed-form pair distance for every family except Explicit.
ChainFormula dsp_formula_chain(const CodeSpec& spec);
/// The matching Hamming distance: the same reduction applied to dH_formula.
int dH_formula_spec(const CodeSpec& spec);

struct MdsVerdict {
  std::string key;
  int d_sp = 0;
  long long log_size = 0;
  /// log_p of q^(N - d_sp + 2), q the alphabet size.
  long long bound_log = 0;
  long long singleton_defect = 0;
  bool is_mds = false;
  /// Full space or zero code.
  bool trivial = false;
  BranchWitness branch;
};

MdsVerdict singleton_defect(const CodeSpec& spec, int d_sp);
MdsVerdict singleton_defect(const QuotientRing& ring, std::string key, long long log_size, int d_sp);

struct ClassifyOptions {
  /// Random units sampled for b(x) in addition to b = 0.
  int units_per_family = 3;
  std::uint64_t seed = 1;
};

/// Every valid spec of the ring: FieldPower, ChainPrincipal, or Type1/2/3 with
/// b in {0} plus sampled units. Sorted by key.
std::vector<CodeSpec> enumerate_specs(const QuotientRing& ring, const ClassifyOptions& options = {});

/// Closed-form verdicts for every spec of enumerate_specs.
std::vector<MdsVerdict> mds_classify(const QuotientRing& ring, const ClassifyOptions& options = {});

/// Nontrivial MDS codes listed in the field table, instantiated at (n, p, s):
/// pairs (i, d_sp) for generator (x^n - alpha0)^i.
std::vector<std::pair<int, int>> table1_mds(int n, int p, int s);

struct Table2Entry {
  int j = 0;
  int k = 0;
  int d_sp = 0;
};
/// Generators (x^n - alpha0)^j + u (x^n - alpha0)^k b(x) listed in the chain table.
std::vector<Table2Entry> table2_mds(int n, int p, int s);

struct TableShape {
  int j = 0;
  /// nullopt when b = 0, where any k gives the same ideal <h^j>.
  std::optional<int> k;
};
/// Reads a spec back as <h^j + u h^k b>, h = x^n - alpha0; nullopt if the ideal
/// has no generator of that shape.
std::optional<TableShape> table_form_of(const CodeSpec& spec);

struct ScanEntry {
  std::string key;
  int formula_sp = 0;
  int formula_H = 0;
  long long closed_log_size = 0;
  int dim_p = -1;
  std::optional<DistanceReport> oracle;
  /// "match", "mismatch" or "skipped"
  std::string status;
  std::string detail;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  int mismatches = 0;
  int skipped = 0;
};

struct ScanOptions {
  ClassifyOptions classify;
  OracleOptions oracle;
};

/// Builds every spec that fits the oracle budget and compares oracle pair and
/// Hamming distances and GF(p)-dimension against the closed forms.
ScanReport consistency_scan(const QuotientRing& ring, const ScanOptions& options = {});
/// Same comparison for an explicit list of specs.
ScanReport consistency_scan(const std::vector<CodeSpec>& specs, const OracleOptions& oracle);

}  // namespace sympair
