#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "sympair/galois.hpp"

namespace sympair {

enum class BaseKind { Field, Chain };

class QPoly;

/// The ambient ring of a constacyclic code of length N = n p^s:
///   field base: GF(p^m)[x] / <x^N - alpha>
///   chain base: (GF(p^m) + u GF(p^m))[x] / <x^N - alpha - u beta>
/// with alpha = alpha0^(p^s) and x^n - alpha0 irreducible.
class QuotientRing {
 public:
  static QuotientRing field_ring(Field field, int n, int s, FieldElement alpha0);
  static QuotientRing chain_ring(Field field, int n, int s, FieldElement alpha0, FieldElement beta);

  BaseKind base() const noexcept { return impl_->base; }
  bool is_chain() const noexcept { return impl_->base == BaseKind::Chain; }
  const Field& field() const noexcept { return impl_->chain.field(); }
  const ChainRing& chain() const noexcept { return impl_->chain; }

  int n() const noexcept { return impl_->n; }
  int s() const noexcept { return impl_->s; }
  /// p^s
  int ps() const noexcept { return impl_->ps; }
  int length() const noexcept { return impl_->length; }
  FieldElement alpha0() const noexcept { return impl_->alpha0; }
  FieldElement alpha() const noexcept { return impl_->alpha; }
  FieldElement beta() const noexcept { return impl_->beta; }
  /// x^N is congruent to lambda.
  ChainElement lambda() const noexcept { return {impl_->alpha, impl_->beta}; }

  /// GF(p) coordinates per symbol: m for the field base, 2m for the chain base.
  int symbol_width() const noexcept { return is_chain() ? 2 * field().m() : field().m(); }
  /// p^s for the field base, 2 p^s for the chain base.
  int max_exponent() const noexcept { return is_chain() ? 2 * impl_->ps : impl_->ps; }

  /// The same field, n, s and alpha0 over the field base.
  QuotientRing field_counterpart() const;

  QPoly zero() const;
  QPoly one() const;
  QPoly monomial(int degree, ChainElement coeff) const;
  /// x^n - alpha0
  QPoly radical_generator() const;
  /// (x^n - alpha0)^i, reduced. Memoized.
  QPoly binom_power(int i) const;

  friend bool operator==(const QuotientRing& x, const QuotientRing& y);

 private:
  struct Impl {
    BaseKind base = BaseKind::Field;
    ChainRing chain;
    int n = 0, s = 0, ps = 0, length = 0;
    FieldElement alpha0, alpha, beta;
    mutable std::mutex memo_mutex;
    // square_memo[t] = (x^n - alpha0)^(2^t)
    mutable std::vector<std::vector<ChainElement>> square_memo;
    mutable std::map<int, std::vector<ChainElement>> power_memo;

    explicit Impl(Field f) : chain(std::move(f)) {}
  };

  static QuotientRing make(BaseKind base, Field field, int n, int s, FieldElement alpha0, FieldElement beta);

  explicit QuotientRing(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<Impl> impl_;
};

/// An element of a QuotientRing: exactly N coefficients, degree 0 first. Over the
/// field base every u-component is zero.
class QPoly {
 public:
  QPoly(QuotientRing ring, std::vector<ChainElement> coeffs);

  const QuotientRing& ring() const noexcept { return ring_; }
  const std::vector<ChainElement>& coeffs() const noexcept { return coeffs_; }
  int size() const noexcept { return static_cast<int>(coeffs_.size()); }
  const ChainElement& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  /// Highest index with a nonzero coefficient, -1 for zero.
  int degree() const;
  /// Number of nonzero coefficients.
  int term_count() const;
  /// True iff no coefficient has a u-component.
  bool is_field_valued() const;

  friend bool operator==(const QPoly& x, const QPoly& y) {
    return x.ring_ == y.ring_ && x.coeffs_ == y.coeffs_;
  }

 private:
  QuotientRing ring_;
  std::vector<ChainElement> coeffs_;
};

QPoly qadd(const QPoly& f, const QPoly& g);
QPoly qsub(const QPoly& f, const QPoly& g);
QPoly qneg(const QPoly& f);
QPoly qscale(ChainElement c, const QPoly& f);
/// Product in the quotient ring, wrapping x^N to lambda.
QPoly qmul(const QPoly& f, const QPoly& g);
/// (lambda v_{N-1}, v_0, ..., v_{N-2})
QPoly consta_shift(const QPoly& v);

/// Smallest gap between exponents of nonzero terms (no wraparound), 0 for monomials.
int coefficient_weight(const QPoly& f);

/// Whether a field-valued b is a unit of GF(p^m)[x]/<x^N - alpha>, i.e. not
/// divisible by x^n - alpha0.
bool is_field_unit(const QPoly& b);
/// Inverse of a field-valued unit in GF(p^m)[x]/<x^N - alpha> (result lives in b's ring).
QPoly field_inverse(const QPoly& b);

/// Flat GF(p) coordinates, symbol_width() per position:
/// [a_0 .. a_{m-1}] (then [b_0 .. b_{m-1}] for the chain base).
using Coord = std::uint16_t;
std::vector<Coord> to_coordinates(const QPoly& f);
QPoly from_coordinates(const QuotientRing& ring, const std::vector<Coord>& coords);

/// One integer per position: a.code + q * b.code.
std::vector<std::uint32_t> symbols(const QPoly& f);

/// Comma separated, degree 0 first. Coefficients over GF(p^m), m > 1, are
/// parenthesised digit lists "(2,1)"; chain coefficients are written "a+ub".
std::string format_qpoly(const QPoly& f);
QPoly parse_qpoly(const QuotientRing& ring, std::string_view text);

}  // namespace sympair
