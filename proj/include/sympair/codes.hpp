#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sympair/quotient.hpp"
#include "sympair/rowspace.hpp"

namespace sympair {

/// C_i = <(x^n - alpha0)^i> over the field base, 0 <= i <= p^s.
struct FieldPower {
  int i = 0;
};
/// D_i = <(x^n - alpha0)^i> over the chain base with beta != 0, 0 <= i <= 2 p^s.
struct ChainPrincipal {
  int i = 0;
};
/// <(x^n - alpha0)^k>, beta = 0.
struct Type1 {
  int k = 0;
};
/// <(x^n - alpha0)^j b + u (x^n - alpha0)^k>, beta = 0.
struct Type2 {
  int j = 0;
  int k = 0;
  QPoly b;
};
/// <(x^n - alpha0)^j b + u (x^n - alpha0)^k, (x^n - alpha0)^(k+t)>, beta = 0.
struct Type3 {
  int j = 0;
  int k = 0;
  int t = 0;
  QPoly b;
};
/// Any ideal given by explicit generators, or a derived space such as a subfield subcode.
struct Explicit {
  std::string label;
};

using CodeVariant = std::variant<FieldPower, ChainPrincipal, Type1, Type2, Type3, Explicit>;

struct CodeSpec {
  QuotientRing ring;
  CodeVariant variant;
};

/// Throws ConstraintViolation, BetaMismatch or NotUnitNorZero.
void validate(const CodeSpec& spec);

/// Stable textual key, e.g. "field-power:i=2" or "type2:j=7,k=1,b=1".
std::string spec_key(const CodeSpec& spec);
/// Inverse of spec_key for every family except Explicit.
CodeSpec parse_code_spec(const QuotientRing& ring, std::string_view text);

/// b is the zero polynomial (only meaningful for Type2 / Type3).
bool has_zero_b(const CodeSpec& spec);

/// log_p |C| from the closed-form ideal sizes; nullopt for Explicit.
std::optional<long long> closed_form_log_size(const CodeSpec& spec);

/// The listed generators of the ideal.
std::vector<QPoly> spec_generators(const CodeSpec& spec);

/// <(x^n - alpha0)^j + u (x^n - alpha0)^k b(x)>, the generator shape used in the MDS
/// tables, rewritten in Type1/2/3 form (b zero or a unit, beta = 0).
CodeSpec table_form_spec(const QuotientRing& ring, int j, int k, const QPoly& b);

/// A code materialised as a GF(p)-subspace of GF(p)^(w N), w = symbol_width().
class ConstacyclicCode {
 public:
  ConstacyclicCode(CodeSpec spec, std::vector<QPoly> generators, RowSpace basis)
      : spec_(std::move(spec)), generators_(std::move(generators)), basis_(std::move(basis)) {}

  const CodeSpec& spec() const noexcept { return spec_; }
  const QuotientRing& ring() const noexcept { return spec_.ring; }
  const std::vector<QPoly>& generators() const noexcept { return generators_; }
  const RowSpace& basis() const noexcept { return basis_; }
  int dim_p() const noexcept { return basis_.rank(); }
  /// p^dim_p, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const;

 private:
  CodeSpec spec_;
  std::vector<QPoly> generators_;
  RowSpace basis_;
};

ConstacyclicCode build_code(const CodeSpec& spec);
/// GF(p)-span of { c x^t g : c in a GF(p)-basis of the symbol ring, 0 <= t < N, g in generators }.
ConstacyclicCode build_ideal(const QuotientRing& ring, const std::vector<QPoly>& generators, std::string label);

bool contains(const ConstacyclicCode& code, const QPoly& w);

/// Codewords with every coordinate in GF(p^m), as a space over the field base.
ConstacyclicCode restrict_subfield(const ConstacyclicCode& code);

/// Counts through all GF(p)-combinations of the basis rows in mixed-radix order,
/// least-significant row first. Each step changes one digit by +1 (mod p), which
/// adds exactly one basis row to the current word; on_add(row) reports it.
class CodewordWalker {
 public:
  CodewordWalker(int p, int rows, std::uint64_t start_index);

  std::uint64_t index() const noexcept { return index_; }
  const std::vector<int>& digits() const noexcept { return digits_; }

  /// Moves to index + 1. Returns false after the last combination.
  template <class OnAdd>
  bool advance(OnAdd&& on_add) {
    for (std::size_t d = 0; d < digits_.size(); ++d) {
      on_add(static_cast<int>(d));
      if (++digits_[d] < p_) {
        ++index_;
        return true;
      }
      digits_[d] = 0;
    }
    index_ = 0;
    return false;
  }

 private:
  int p_;
  std::vector<int> digits_;
  std::uint64_t index_;
};

enum class EnumerationStatus { Complete, Exhausted };

using CodewordVisitor = std::function<void(std::uint64_t index, std::span<const Coord> word)>;

/// Visits every codeword exactly once when p^dim_p <= budget; otherwise visits
/// nothing and returns Exhausted.
EnumerationStatus enumerate(const ConstacyclicCode& code, std::uint64_t budget, const CodewordVisitor& visit);

/// The codeword with the given counter index.
std::vector<Coord> codeword_at(const ConstacyclicCode& code, std::uint64_t index);
/// A uniformly random codeword.
std::vector<Coord> random_codeword(const ConstacyclicCode& code, std::mt19937_64& rng);

/// Draws random field-valued polynomials until one is a unit of GF(p^m)[x]/<x^N - alpha>.
QPoly random_field_unit(const QuotientRing& ring, std::mt19937_64& rng);

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 21;

}  // namespace sympair
