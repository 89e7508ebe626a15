#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sympair/errors.hpp"

namespace sympair {

/// An element of GF(p^m). The coefficient vector c_0 + c_1 y + ... + c_{m-1} y^{m-1}
/// is packed into one integer as sum c_e p^e, so the constant term is the least
/// significant digit.
struct FieldElement {
  std::uint32_t code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// a + u*b with u^2 = 0.
struct ChainElement {
  FieldElement a;
  FieldElement b;

  friend auto operator<=>(const ChainElement&, const ChainElement&) = default;
};

/// GF(p^m) = GF(p)[y] / (modulus). Cheap to copy; the arithmetic tables are shared
/// and immutable once built.
class Field {
 public:
  /// Builds GF(p^m). Without a modulus the lexicographically smallest monic
  /// irreducible polynomial (constant term compared first) is used.
  static Field build(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const noexcept { return impl_->p; }
  int m() const noexcept { return impl_->m; }
  std::uint32_t q() const noexcept { return impl_->q; }
  /// m+1 coefficients over GF(p), constant term first, leading coefficient 1.
  const std::vector<int>& modulus() const noexcept { return impl_->modulus; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// Image of an integer under Z -> GF(p) -> GF(p^m).
  FieldElement from_int(long long v) const;
  /// Pads with zeros up to length m; rejects digits outside [0, p) and overlong input.
  FieldElement from_digits(std::span<const int> digits) const;
  std::vector<int> digits(FieldElement a) const;
  /// The class of y; a primitive-element candidate when the modulus is primitive.
  FieldElement y() const;

  void check(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Least e > 0 with a^e = 1.
  std::uint64_t order(FieldElement a) const;

  /// All elements in code order.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const Field& x, const Field& y) {
    return x.impl_ == y.impl_ ||
           (x.p() == y.p() && x.m() == y.m() && x.modulus() == y.modulus());
  }

 private:
  struct Impl {
    int p = 0;
    int m = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;
    // Dense tables, present only for small q.
    std::vector<std::uint32_t> add_table;
    std::vector<std::uint32_t> mul_table;
    std::vector<std::uint32_t> inv_table;
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::uint32_t raw_add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t raw_neg(std::uint32_t a) const;
  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const;

  std::shared_ptr<const Impl> impl_;
};

/// GF(p^m) + u GF(p^m), u^2 = 0.
class ChainRing {
 public:
  explicit ChainRing(Field field) : field_(std::move(field)) {}

  const Field& field() const noexcept { return field_; }

  ChainElement embed(FieldElement a) const { return {a, field_.zero()}; }
  ChainElement u() const { return {field_.zero(), field_.one()}; }

  ChainElement add(ChainElement x, ChainElement y) const;
  ChainElement sub(ChainElement x, ChainElement y) const;
  ChainElement neg(ChainElement x) const;
  ChainElement mul(ChainElement x, ChainElement y) const;
  /// (a + ub)^{-1} = a^{-1} - u a^{-2} b; throws NonUnit when a = 0.
  ChainElement inv(ChainElement x) const;

  static bool is_unit(ChainElement x) noexcept { return x.a.code != 0; }
  static bool is_zero_divisor(ChainElement x) noexcept { return x.a.code == 0 && x.b.code != 0; }

 private:
  Field field_;
};

bool is_prime(long long n);
/// Distinct prime factors in increasing order (trial division).
std::vector<long long> prime_factors(long long n);

/// Irreducibility of a monic polynomial over GF(p) (Rabin's test).
bool is_irreducible_mod_p(int p, std::span<const int> monic_poly);

/// x^n - lambda irreducible over the field. n = 1 is always irreducible.
bool binomial_irreducible(const Field& field, long long n, FieldElement lambda);

/// Every lambda for which x^n - lambda is irreducible, in code order.
std::vector<FieldElement> irreducible_binomial_constants(const Field& field, long long n);

/// Elements of order q - 1.
std::vector<FieldElement> primitive_elements(const Field& field);

/// "c0,c1,...", constant term first, always m digits.
std::string format_element(const Field& field, FieldElement a);
FieldElement parse_element(const Field& field, std::string_view text);
/// "a|b" for a + u b.
std::string format_chain_element(const Field& field, ChainElement x);
ChainElement parse_chain_element(const Field& field, std::string_view text);

}  // namespace sympair
