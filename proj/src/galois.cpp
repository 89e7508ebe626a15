#include "sympair/galois.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

namespace sympair {

namespace {

constexpr std::uint32_t kTableLimit = 512;

using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int inv_mod(int a, int p) {
  // p is small; extended Euclid
  int t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    int quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return (t % p + p) % p;
}

Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  const int lead_inv = inv_mod(g.back(), p);
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int c = f.back() * lead_inv % p;
    for (int i = 0; i <= dg; ++i) {
      f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), g, p);
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod g by k successive p-th powers.
Poly frobenius_power(const Poly& g, int p, int k) {
  Poly acc = poly_mod(Poly{0, 1}, g, p);
  for (int step = 0; step < k; ++step) {
    Poly base = acc;
    Poly result{1};
    for (int e = p; e > 0; e >>= 1) {
      if (e & 1) result = poly_mulmod(result, base, g, p);
      base = poly_mulmod(base, base, g, p);
    }
    acc = std::move(result);
  }
  return acc;
}

Poly sub_x(Poly f, int p) {
  if (f.size() < 2) f.resize(2, 0);
  f[1] = (f[1] - 1 + p) % p;
  trim(f);
  return f;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible_mod_p(int p, std::span<const int> monic_poly) {
  Poly g(monic_poly.begin(), monic_poly.end());
  trim(g);
  const int m = static_cast<int>(g.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  // x^(p^m) = x mod g, and gcd(x^(p^(m/r)) - x, g) = 1 for every prime r | m.
  if (!sub_x(frobenius_power(g, p, m), p).empty()) return false;
  for (long long r : prime_factors(m)) {
    Poly h = sub_x(frobenius_power(g, p, m / static_cast<int>(r)), p);
    Poly d = poly_gcd(g, h, p);
    if (d.size() != 1) return false;
  }
  return true;
}

Field Field::build(int p, int m, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
  std::uint64_t q64 = 1;
  for (int e = 0; e < m; ++e) {
    q64 *= static_cast<std::uint64_t>(p);
    if (q64 > (1ULL << 30)) throw Error(ErrorKind::ConstraintViolation, "field too large");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q64);

  if (modulus) {
    Poly f = *modulus;
    for (int& c : f) {
      if (c < 0 || c >= p) throw Error(ErrorKind::DegreeMismatch, "modulus coefficient out of range");
    }
    trim(f);
    if (static_cast<int>(f.size()) != m + 1) {
      throw Error(ErrorKind::DegreeMismatch, "modulus degree differs from m");
    }
    if (f.back() != 1) throw Error(ErrorKind::DegreeMismatch, "modulus is not monic");
    if (!is_irreducible_mod_p(p, f)) throw Error(ErrorKind::ReducibleModulus, "modulus factors over GF(p)");
    impl->modulus = std::move(f);
  } else {
    // Lexicographic order on (c_0, c_1, ..., c_{m-1}): c_0 is the most significant.
    Poly f(m + 1, 0);
    f[m] = 1;
    std::uint64_t count = q64;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (int e = m - 1; e >= 0; --e) {
        f[e] = static_cast<int>(rest % p);
        rest /= p;
      }
      if (is_irreducible_mod_p(p, f)) {
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
    impl->modulus = std::move(f);
  }

  Field field(impl);
  if (impl->q <= kTableLimit) {
    const std::uint32_t q = impl->q;
    impl->add_table.resize(static_cast<std::size_t>(q) * q);
    impl->mul_table.resize(static_cast<std::size_t>(q) * q);
    impl->inv_table.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        impl->add_table[a * q + b] = field.raw_add(a, b);
        impl->mul_table[a * q + b] = field.raw_mul(a, b);
      }
    }
    for (std::uint32_t a = 1; a < q; ++a) {
      for (std::uint32_t b = 1; b < q; ++b) {
        if (impl->mul_table[a * q + b] == 1) {
          impl->inv_table[a] = b;
          break;
        }
      }
    }
  }
  return field;
}

std::uint32_t Field::raw_add(std::uint32_t a, std::uint32_t b) const {
  const auto p = static_cast<std::uint32_t>(impl_->p);
  std::uint32_t out = 0, scale = 1;
  for (int e = 0; e < impl_->m; ++e) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t Field::raw_neg(std::uint32_t a) const {
  const auto p = static_cast<std::uint32_t>(impl_->p);
  std::uint32_t out = 0, scale = 1;
  for (int e = 0; e < impl_->m; ++e) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t Field::raw_mul(std::uint32_t a, std::uint32_t b) const {
  const int p = impl_->p;
  const int m = impl_->m;
  std::vector<int> x(m), y(m);
  for (int e = 0; e < m; ++e) {
    x[e] = static_cast<int>(a % p);
    y[e] = static_cast<int>(b % p);
    a /= p;
    b /= p;
  }
  Poly prod = poly_mulmod(x, y, impl_->modulus, p);
  std::uint32_t out = 0, scale = 1;
  for (std::size_t e = 0; e < prod.size(); ++e) {
    out += static_cast<std::uint32_t>(prod[e]) * scale;
    scale *= static_cast<std::uint32_t>(p);
  }
  return out;
}

void Field::check(FieldElement a) const {
  if (a.code >= impl_->q) throw Error(ErrorKind::FieldMismatch, "element outside GF(" + std::to_string(impl_->q) + ")");
}

FieldElement Field::from_int(long long v) const {
  const long long p = impl_->p;
  return {static_cast<std::uint32_t>(((v % p) + p) % p)};
}

FieldElement Field::from_digits(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) > impl_->m) {
    throw Error(ErrorKind::FieldMismatch, "more than m coefficients");
  }
  std::uint32_t out = 0, scale = 1;
  for (int d : digits) {
    if (d < 0 || d >= impl_->p) throw Error(ErrorKind::FieldMismatch, "coefficient outside [0, p)");
    out += static_cast<std::uint32_t>(d) * scale;
    scale *= static_cast<std::uint32_t>(impl_->p);
  }
  return {out};
}

std::vector<int> Field::digits(FieldElement a) const {
  check(a);
  std::vector<int> out(impl_->m);
  std::uint32_t c = a.code;
  for (int e = 0; e < impl_->m; ++e) {
    out[e] = static_cast<int>(c % static_cast<std::uint32_t>(impl_->p));
    c /= static_cast<std::uint32_t>(impl_->p);
  }
  return out;
}

FieldElement Field::y() const {
  if (impl_->m == 1) return {static_cast<std::uint32_t>((impl_->p - impl_->modulus[0]) % impl_->p)};
  return {static_cast<std::uint32_t>(impl_->p)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (!impl_->add_table.empty()) return {impl_->add_table[a.code * impl_->q + b.code]};
  return {raw_add(a.code, b.code)};
}

FieldElement Field::neg(FieldElement a) const {
  check(a);
  return {raw_neg(a.code)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (!impl_->mul_table.empty()) return {impl_->mul_table[a.code * impl_->q + b.code]};
  return {raw_mul(a.code, b.code)};
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!impl_->inv_table.empty()) return {impl_->inv_table[a.code]};
  return pow(a, impl_->q - 2);
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t Field::order(FieldElement a) const {
  check(a);
  if (a.code == 0) throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
  std::uint64_t e = impl_->q - 1;
  for (long long r : prime_factors(static_cast<long long>(e))) {
    while (e % r == 0 && pow(a, e / r) == one()) e /= r;
  }
  return e;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(impl_->q);
  for (std::uint32_t c = 0; c < impl_->q; ++c) out[c] = {c};
  return out;
}

ChainElement ChainRing::add(ChainElement x, ChainElement y) const {
  return {field_.add(x.a, y.a), field_.add(x.b, y.b)};
}

ChainElement ChainRing::sub(ChainElement x, ChainElement y) const {
  return {field_.sub(x.a, y.a), field_.sub(x.b, y.b)};
}

ChainElement ChainRing::neg(ChainElement x) const { return {field_.neg(x.a), field_.neg(x.b)}; }

ChainElement ChainRing::mul(ChainElement x, ChainElement y) const {
  return {field_.mul(x.a, y.a), field_.add(field_.mul(x.a, y.b), field_.mul(x.b, y.a))};
}

ChainElement ChainRing::inv(ChainElement x) const {
  if (!is_unit(x)) throw Error(ErrorKind::NonUnit, "a + ub with a = 0 is not invertible");
  const FieldElement ai = field_.inv(x.a);
  return {ai, field_.neg(field_.mul(field_.mul(ai, ai), x.b))};
}

bool binomial_irreducible(const Field& field, long long n, FieldElement lambda) {
  field.check(lambda);
  if (lambda.code == 0) throw Error(ErrorKind::ZeroElement, "binomial constant must be nonzero");
  if (n < 1) throw Error(ErrorKind::ConstraintViolation, "n must be positive");
  if (n == 1) return true;
  const std::uint64_t q = field.q();
  const std::uint64_t e = field.order(lambda);
  for (long long r : prime_factors(n)) {
    const auto ru = static_cast<std::uint64_t>(r);
    if (e % ru != 0) return false;
    if (((q - 1) / e) % ru == 0) return false;
  }
  if (n % 4 == 0 && q % 4 != 1) return false;
  return true;
}

std::vector<FieldElement> irreducible_binomial_constants(const Field& field, long long n) {
  std::vector<FieldElement> out;
  for (std::uint32_t c = 1; c < field.q(); ++c) {
    if (binomial_irreducible(field, n, {c})) out.push_back({c});
  }
  return out;
}

std::vector<FieldElement> primitive_elements(const Field& field) {
  std::vector<FieldElement> out;
  for (std::uint32_t c = 1; c < field.q(); ++c) {
    if (field.order({c}) == field.q() - 1) out.push_back({c});
  }
  return out;
}

std::string format_element(const Field& field, FieldElement a) {
  std::string out;
  for (int d : field.digits(a)) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

FieldElement parse_element(const Field& field, std::string_view text) {
  std::vector<int> digits;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError, "bad field element '" + std::string(text) + "'");
    }
    digits.push_back(value);
    pos = next + 1;
  }
  return field.from_digits(digits);
}

std::string format_chain_element(const Field& field, ChainElement x) {
  return format_element(field, x.a) + "|" + format_element(field, x.b);
}

ChainElement parse_chain_element(const Field& field, std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) return {parse_element(field, text), field.zero()};
  return {parse_element(field, text.substr(0, bar)), parse_element(field, text.substr(bar + 1))};
}

}  // namespace sympair
