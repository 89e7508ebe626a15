#include "sympair/quotient.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace sympair {

namespace {

constexpr int kMaxLength = 4096;

void require_same_ring(const QPoly& f, const QPoly& g) {
  if (!(f.ring() == g.ring())) throw Error(ErrorKind::RingMismatch, "operands live in different quotient rings");
}

// Dense polynomials over GF(p^m), constant term first, no trailing zeros.
using FPoly = std::vector<FieldElement>;

void trim(FPoly& f) {
  while (!f.empty() && f.back().code == 0) f.pop_back();
}

FPoly fpoly_sub(const Field& F, FPoly a, const FPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), F.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

FPoly fpoly_mul(const Field& F, const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].code == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

// Returns (quotient, remainder).
std::pair<FPoly, FPoly> fpoly_divmod(const Field& F, FPoly a, const FPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const FieldElement lead_inv = F.inv(b.back());
  FPoly quot(a.size() >= b.size() ? a.size() - db : 0, F.zero());
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const FieldElement c = F.mul(a.back(), lead_inv);
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

FPoly field_part(const QPoly& f) {
  if (!f.is_field_valued()) throw Error(ErrorKind::ConstraintViolation, "polynomial has u-components");
  FPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.a);
  trim(out);
  return out;
}

std::string_view strip(std::string_view t) {
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  return t;
}

// Splits on commas that are not inside parentheses.
std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw Error(ErrorKind::ParseError, "unbalanced parentheses");
    if (text[i] == ',' && depth == 0) {
      out.push_back(strip(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorKind::ParseError, "unbalanced parentheses");
  out.push_back(strip(text.substr(start)));
  return out;
}

FieldElement parse_coefficient(const Field& F, std::string_view t) {
  t = strip(t);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  return parse_element(F, t);
}

std::string format_coefficient(const Field& F, FieldElement a) {
  if (F.m() == 1) return format_element(F, a);
  return "(" + format_element(F, a) + ")";
}

}  // namespace

QuotientRing QuotientRing::make(BaseKind base, Field field, int n, int s, FieldElement alpha0, FieldElement beta) {
  field.check(alpha0);
  field.check(beta);
  if (n < 1 || s < 1) throw Error(ErrorKind::ConstraintViolation, "n and s must be positive");
  if (n % field.p() == 0) throw Error(ErrorKind::ConstructionRefused, "gcd(n, p) != 1");
  if (alpha0.code == 0) throw Error(ErrorKind::ConstructionRefused, "alpha0 must be nonzero");
  long long ps = 1;
  for (int e = 0; e < s; ++e) {
    ps *= field.p();
    if (ps * n > kMaxLength) throw Error(ErrorKind::ConstraintViolation, "code length too large");
  }
  if (!binomial_irreducible(field, n, alpha0)) {
    throw Error(ErrorKind::ConstructionRefused, "x^n - alpha0 is reducible over GF(p^m)");
  }
  auto impl = std::make_shared<Impl>(field);
  impl->base = base;
  impl->n = n;
  impl->s = s;
  impl->ps = static_cast<int>(ps);
  impl->length = static_cast<int>(ps) * n;
  impl->alpha0 = alpha0;
  impl->alpha = field.pow(alpha0, static_cast<std::uint64_t>(ps));
  impl->beta = base == BaseKind::Chain ? beta : field.zero();
  return QuotientRing(std::move(impl));
}

QuotientRing QuotientRing::field_ring(Field field, int n, int s, FieldElement alpha0) {
  return make(BaseKind::Field, std::move(field), n, s, alpha0, FieldElement{});
}

QuotientRing QuotientRing::chain_ring(Field field, int n, int s, FieldElement alpha0, FieldElement beta) {
  return make(BaseKind::Chain, std::move(field), n, s, alpha0, beta);
}

QuotientRing QuotientRing::field_counterpart() const {
  if (!is_chain()) return *this;
  return field_ring(field(), n(), s(), alpha0());
}

bool operator==(const QuotientRing& x, const QuotientRing& y) {
  if (x.impl_ == y.impl_) return true;
  return x.base() == y.base() && x.field() == y.field() && x.n() == y.n() && x.s() == y.s() &&
         x.alpha0() == y.alpha0() && x.beta() == y.beta();
}

QPoly QuotientRing::zero() const {
  return QPoly(*this, std::vector<ChainElement>(static_cast<std::size_t>(length())));
}

QPoly QuotientRing::one() const { return monomial(0, {field().one(), field().zero()}); }

QPoly QuotientRing::monomial(int degree, ChainElement coeff) const {
  if (degree < 0 || degree >= length()) throw Error(ErrorKind::ExponentOutOfRange, "monomial degree outside [0, N)");
  std::vector<ChainElement> c(static_cast<std::size_t>(length()));
  c[static_cast<std::size_t>(degree)] = coeff;
  return QPoly(*this, std::move(c));
}

QPoly QuotientRing::radical_generator() const {
  std::vector<ChainElement> c(static_cast<std::size_t>(length()));
  c[0] = {field().neg(alpha0()), field().zero()};
  c[static_cast<std::size_t>(n())] = {field().one(), field().zero()};
  return QPoly(*this, std::move(c));
}

QPoly QuotientRing::binom_power(int i) const {
  if (i < 0 || i > max_exponent()) {
    throw Error(ErrorKind::ExponentOutOfRange, "exponent " + std::to_string(i) + " outside [0, " +
                                                   std::to_string(max_exponent()) + "]");
  }
  {
    std::lock_guard lock(impl_->memo_mutex);
    if (auto it = impl_->power_memo.find(i); it != impl_->power_memo.end()) return QPoly(*this, it->second);
    if (impl_->square_memo.empty()) impl_->square_memo.push_back(radical_generator().coeffs());
  }
  QPoly result = one();
  int t = 0;
  for (int e = i; e > 0; e >>= 1, ++t) {
    std::vector<ChainElement> square;
    {
      std::lock_guard lock(impl_->memo_mutex);
      while (static_cast<int>(impl_->square_memo.size()) <= t) {
        QPoly last(*this, impl_->square_memo.back());
        impl_->square_memo.push_back(qmul(last, last).coeffs());
      }
      square = impl_->square_memo[static_cast<std::size_t>(t)];
    }
    if (e & 1) result = qmul(result, QPoly(*this, std::move(square)));
  }
  std::lock_guard lock(impl_->memo_mutex);
  impl_->power_memo.emplace(i, result.coeffs());
  return result;
}

QPoly::QPoly(QuotientRing ring, std::vector<ChainElement> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ring_.length()) {
    throw Error(ErrorKind::RingMismatch, "coefficient count differs from the ring length");
  }
  for (const auto& c : coeffs_) {
    ring_.field().check(c.a);
    ring_.field().check(c.b);
    if (!ring_.is_chain() && c.b.code != 0) throw Error(ErrorKind::RingMismatch, "u-component in a field-base polynomial");
  }
}

bool QPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ChainElement& c) { return c == ChainElement{}; });
}

int QPoly::degree() const {
  for (int i = size() - 1; i >= 0; --i) {
    if (!(coeffs_[static_cast<std::size_t>(i)] == ChainElement{})) return i;
  }
  return -1;
}

int QPoly::term_count() const {
  return static_cast<int>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const ChainElement& c) { return !(c == ChainElement{}); }));
}

bool QPoly::is_field_valued() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ChainElement& c) { return c.b.code == 0; });
}

QPoly qadd(const QPoly& f, const QPoly& g) {
  require_same_ring(f, g);
  const ChainRing& R = f.ring().chain();
  std::vector<ChainElement> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.add(f.coeffs()[i], g.coeffs()[i]);
  return QPoly(f.ring(), std::move(out));
}

QPoly qsub(const QPoly& f, const QPoly& g) { return qadd(f, qneg(g)); }

QPoly qneg(const QPoly& f) {
  const ChainRing& R = f.ring().chain();
  std::vector<ChainElement> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.neg(f.coeffs()[i]);
  return QPoly(f.ring(), std::move(out));
}

QPoly qscale(ChainElement c, const QPoly& f) {
  if (!f.ring().is_chain() && c.b.code != 0) throw Error(ErrorKind::RingMismatch, "u-scalar on a field-base polynomial");
  const ChainRing& R = f.ring().chain();
  std::vector<ChainElement> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.mul(c, f.coeffs()[i]);
  return QPoly(f.ring(), std::move(out));
}

QPoly qmul(const QPoly& f, const QPoly& g) {
  require_same_ring(f, g);
  const ChainRing& R = f.ring().chain();
  const ChainElement lambda = f.ring().lambda();
  const std::size_t N = f.coeffs().size();
  std::vector<ChainElement> low(N), high(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (f.coeffs()[i] == ChainElement{}) continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (g.coeffs()[j] == ChainElement{}) continue;
      const ChainElement term = R.mul(f.coeffs()[i], g.coeffs()[j]);
      if (i + j < N) {
        low[i + j] = R.add(low[i + j], term);
      } else {
        high[i + j - N] = R.add(high[i + j - N], term);
      }
    }
  }
  for (std::size_t k = 0; k < N; ++k) low[k] = R.add(low[k], R.mul(lambda, high[k]));
  return QPoly(f.ring(), std::move(low));
}

QPoly consta_shift(const QPoly& v) {
  const std::size_t N = v.coeffs().size();
  std::vector<ChainElement> out(N);
  out[0] = v.ring().chain().mul(v.ring().lambda(), v.coeffs()[N - 1]);
  for (std::size_t i = 1; i < N; ++i) out[i] = v.coeffs()[i - 1];
  return QPoly(v.ring(), std::move(out));
}

int coefficient_weight(const QPoly& f) {
  int previous = -1;
  int best = 0;
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] == ChainElement{}) continue;
    if (previous >= 0 && (best == 0 || i - previous < best)) best = i - previous;
    previous = i;
  }
  if (previous < 0) throw Error(ErrorKind::ZeroPolynomial, "coefficient weight of the zero polynomial");
  return best;
}

bool is_field_unit(const QPoly& b) {
  const QuotientRing& ring = b.ring();
  const Field& F = ring.field();
  if (!b.is_field_valued()) throw Error(ErrorKind::ConstraintViolation, "polynomial has u-components");
  // b mod (x^n - alpha0): fold x^(qn + r) to alpha0^q x^r.
  std::vector<FieldElement> residue(static_cast<std::size_t>(ring.n()), F.zero());
  FieldElement scale = F.one();
  for (int i = 0; i < b.size(); ++i) {
    if (i > 0 && i % ring.n() == 0) scale = F.mul(scale, ring.alpha0());
    auto& slot = residue[static_cast<std::size_t>(i % ring.n())];
    slot = F.add(slot, F.mul(scale, b[i].a));
  }
  return std::any_of(residue.begin(), residue.end(), [](FieldElement e) { return e.code != 0; });
}

QPoly field_inverse(const QPoly& b) {
  const QuotientRing& ring = b.ring();
  const Field& F = ring.field();
  FPoly modulus(static_cast<std::size_t>(ring.length()) + 1, F.zero());
  modulus[0] = F.neg(ring.alpha());
  modulus.back() = F.one();

  // Extended Euclid tracking only the coefficient of b.
  FPoly r0 = modulus, r1 = field_part(b);
  FPoly t0, t1{F.one()};
  if (r1.empty()) throw Error(ErrorKind::NonUnit, "zero is not invertible");
  while (r1.size() > 1) {
    auto [quot, rem] = fpoly_divmod(F, r0, r1);
    FPoly t2 = fpoly_sub(F, t0, fpoly_mul(F, quot, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
    if (r1.empty()) throw Error(ErrorKind::NonUnit, "polynomial shares a factor with x^N - alpha");
  }
  const FieldElement c = F.inv(r1[0]);
  auto [unused, reduced] = fpoly_divmod(F, fpoly_mul(F, t1, FPoly{c}), modulus);
  std::vector<ChainElement> out(static_cast<std::size_t>(ring.length()));
  for (std::size_t i = 0; i < reduced.size(); ++i) out[i] = {reduced[i], F.zero()};
  return QPoly(ring, std::move(out));
}

std::vector<Coord> to_coordinates(const QPoly& f) {
  const Field& F = f.ring().field();
  const int m = F.m();
  const int w = f.ring().symbol_width();
  std::vector<Coord> out(static_cast<std::size_t>(w) * f.coeffs().size());
  for (std::size_t t = 0; t < f.coeffs().size(); ++t) {
    std::uint32_t a = f.coeffs()[t].a.code;
    std::uint32_t b = f.coeffs()[t].b.code;
    const auto p = static_cast<std::uint32_t>(F.p());
    for (int e = 0; e < m; ++e) {
      out[t * w + e] = static_cast<Coord>(a % p);
      a /= p;
      if (f.ring().is_chain()) {
        out[t * w + m + e] = static_cast<Coord>(b % p);
        b /= p;
      }
    }
  }
  return out;
}

QPoly from_coordinates(const QuotientRing& ring, const std::vector<Coord>& coords) {
  const int m = ring.field().m();
  const int w = ring.symbol_width();
  if (static_cast<int>(coords.size()) != w * ring.length()) {
    throw Error(ErrorKind::RingMismatch, "coordinate vector has the wrong length");
  }
  const auto p = static_cast<std::uint32_t>(ring.field().p());
  std::vector<ChainElement> out(static_cast<std::size_t>(ring.length()));
  for (std::size_t t = 0; t < out.size(); ++t) {
    std::uint32_t a = 0, b = 0, scale = 1;
    for (int e = 0; e < m; ++e) {
      a += coords[t * w + e] * scale;
      if (ring.is_chain()) b += coords[t * w + m + e] * scale;
      scale *= p;
    }
    out[t] = {{a}, {b}};
  }
  return QPoly(ring, std::move(out));
}

std::vector<std::uint32_t> symbols(const QPoly& f) {
  const std::uint32_t q = f.ring().field().q();
  std::vector<std::uint32_t> out(f.coeffs().size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = f.coeffs()[t].a.code + q * f.coeffs()[t].b.code;
  return out;
}

std::string format_qpoly(const QPoly& f) {
  const Field& F = f.ring().field();
  std::string out;
  for (const auto& c : f.coeffs()) {
    if (!out.empty()) out += ',';
    out += format_coefficient(F, c.a);
    if (f.ring().is_chain()) out += "+u" + format_coefficient(F, c.b);
  }
  return out;
}

QPoly parse_qpoly(const QuotientRing& ring, std::string_view text) {
  const Field& F = ring.field();
  std::vector<ChainElement> coeffs(static_cast<std::size_t>(ring.length()));
  auto tokens = split_top_level(text);
  if (static_cast<int>(tokens.size()) > ring.length()) {
    throw Error(ErrorKind::ParseError, "more coefficients than the code length");
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string_view tok = tokens[i];
    ChainElement c{F.zero(), F.zero()};
    // Split "a+ub" at the '+' that precedes 'u' outside parentheses.
    std::size_t upos = std::string_view::npos;
    int depth = 0;
    for (std::size_t k = 0; k < tok.size(); ++k) {
      if (tok[k] == '(') ++depth;
      if (tok[k] == ')') --depth;
      if (tok[k] == 'u' && depth == 0) {
        upos = k;
        break;
      }
    }
    if (upos == std::string_view::npos) {
      c.a = parse_coefficient(F, tok);
    } else {
      if (!ring.is_chain()) throw Error(ErrorKind::ParseError, "u-term in a field-base polynomial");
      std::string_view head = strip(tok.substr(0, upos));
      if (!head.empty()) {
        if (head.back() != '+') throw Error(ErrorKind::ParseError, "expected 'a+ub' in '" + std::string(tok) + "'");
        head.remove_suffix(1);
        c.a = parse_coefficient(F, head);
      }
      std::string_view tail = strip(tok.substr(upos + 1));
      c.b = tail.empty() ? F.one() : parse_coefficient(F, tail);
    }
    coeffs[i] = c;
  }
  return QPoly(ring, std::move(coeffs));
}

}  // namespace sympair
