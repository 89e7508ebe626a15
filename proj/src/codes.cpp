#include "sympair/codes.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace sympair {

namespace {

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorKind::ConstraintViolation, what); }

int ceil_half(int v) { return (v + 1) / 2; }

void require_chain_beta_zero(const QuotientRing& ring, const char* family) {
  if (!ring.is_chain()) violation(std::string(family) + " needs the chain-ring base");
  if (ring.beta().code != 0) throw Error(ErrorKind::BetaMismatch, std::string(family) + " requires beta = 0");
}

void check_b(const QuotientRing& ring, const QPoly& b) {
  if (!(b.ring() == ring)) throw Error(ErrorKind::RingMismatch, "b(x) lives in a different ring");
  if (!b.is_field_valued()) throw Error(ErrorKind::NotUnitNorZero, "b(x) must have coefficients in GF(p^m)");
  if (!b.is_zero() && !is_field_unit(b)) throw Error(ErrorKind::NotUnitNorZero, "b(x) is neither zero nor a unit");
}

std::string short_poly(const QPoly& b) {
  const Field& F = b.ring().field();
  const int deg = b.degree();
  if (deg < 0) return "0";
  std::string out;
  for (int i = 0; i <= deg; ++i) {
    if (i > 0) out += ',';
    const std::string digits = format_element(F, b[i].a);
    out += F.m() == 1 ? digits : "(" + digits + ")";
  }
  return out;
}

std::uint64_t checked_power(int p, int e, bool& overflow) {
  std::uint64_t out = 1;
  overflow = false;
  for (int k = 0; k < e; ++k) {
    if (out > UINT64_MAX / static_cast<std::uint64_t>(p)) {
      overflow = true;
      return UINT64_MAX;
    }
    out *= static_cast<std::uint64_t>(p);
  }
  return out;
}

// Scalars spanning the symbol ring over GF(p): y^e, and u y^e for the chain base.
std::vector<ChainElement> scalar_basis(const QuotientRing& ring) {
  const Field& F = ring.field();
  std::vector<ChainElement> out;
  std::uint32_t code = 1;
  for (int e = 0; e < F.m(); ++e) {
    out.push_back({{code}, F.zero()});
    if (ring.is_chain()) out.push_back({F.zero(), {code}});
    code *= static_cast<std::uint32_t>(F.p());
  }
  return out;
}

void add_row(std::vector<Coord>& word, const RowSpace::Row& row, int p) {
  for (std::size_t c = 0; c < word.size(); ++c) {
    if (row[c] != 0) word[c] = static_cast<Coord>((word[c] + row[c]) % p);
  }
}

}  // namespace

void validate(const CodeSpec& spec) {
  const QuotientRing& ring = spec.ring;
  const int ps = ring.ps();
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FieldPower>) {
          if (ring.is_chain()) violation("field-power needs the field base");
          if (v.i < 0 || v.i > ps) violation("field-power needs 0 <= i <= p^s");
        } else if constexpr (std::is_same_v<V, ChainPrincipal>) {
          if (!ring.is_chain()) violation("chain needs the chain-ring base");
          if (ring.beta().code == 0) throw Error(ErrorKind::BetaMismatch, "chain requires beta != 0");
          if (v.i < 0 || v.i > 2 * ps) violation("chain needs 0 <= i <= 2 p^s");
        } else if constexpr (std::is_same_v<V, Type1>) {
          require_chain_beta_zero(ring, "type1");
          if (v.k < 0 || v.k > ps) violation("type1 needs 0 <= k <= p^s");
        } else if constexpr (std::is_same_v<V, Type2>) {
          require_chain_beta_zero(ring, "type2");
          if (v.k < 0 || v.k > ps - 1) violation("type2 needs 0 <= k <= p^s - 1");
          if (v.j < ceil_half(ps + v.k) || v.j > ps - 1) violation("type2 needs ceil((p^s + k)/2) <= j <= p^s - 1");
          check_b(ring, v.b);
        } else if constexpr (std::is_same_v<V, Type3>) {
          require_chain_beta_zero(ring, "type3");
          if (v.k < 0 || v.k > ps - 2) violation("type3 needs 0 <= k <= p^s - 2");
          if (v.t < 1 || v.t > ps - v.k - 1) violation("type3 needs 1 <= t <= p^s - k - 1");
          if (v.j < v.k + ceil_half(v.t) || v.j > v.k + v.t) violation("type3 needs k + ceil(t/2) <= j <= k + t");
          check_b(ring, v.b);
        }
      },
      spec.variant);
}

std::string spec_key(const CodeSpec& spec) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FieldPower>) {
          return "field-power:i=" + std::to_string(v.i);
        } else if constexpr (std::is_same_v<V, ChainPrincipal>) {
          return "chain:i=" + std::to_string(v.i);
        } else if constexpr (std::is_same_v<V, Type1>) {
          return "type1:k=" + std::to_string(v.k);
        } else if constexpr (std::is_same_v<V, Type2>) {
          return "type2:j=" + std::to_string(v.j) + ",k=" + std::to_string(v.k) + ",b=" + short_poly(v.b);
        } else if constexpr (std::is_same_v<V, Type3>) {
          return "type3:j=" + std::to_string(v.j) + ",k=" + std::to_string(v.k) + ",t=" + std::to_string(v.t) +
                 ",b=" + short_poly(v.b);
        } else {
          return "explicit:" + v.label;
        }
      },
      spec.variant);
}

CodeSpec parse_code_spec(const QuotientRing& ring, std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "code spec needs 'family:key=value,...'");
  const std::string_view family = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);

  // b= swallows the remainder since polynomials contain commas.
  std::optional<QPoly> b;
  if (const std::size_t bpos = rest.find("b="); bpos != std::string_view::npos) {
    if (bpos > 0 && rest[bpos - 1] != ',') throw Error(ErrorKind::ParseError, "malformed b= in code spec");
    b = parse_qpoly(ring, rest.substr(bpos + 2));
    rest = rest.substr(0, bpos == 0 ? 0 : bpos - 1);
  }
  std::map<std::string, int, std::less<>> values;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t next = rest.find(',', pos);
    if (next == std::string_view::npos) next = rest.size();
    const std::string_view item = rest.substr(pos, next - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected key=value in code spec");
    int value = 0;
    const std::string_view num = item.substr(eq + 1);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size()) throw Error(ErrorKind::ParseError, "bad integer in code spec");
    values[std::string(item.substr(0, eq))] = value;
    pos = next + 1;
  }
  auto get = [&](const char* key) {
    auto it = values.find(key);
    if (it == values.end()) throw Error(ErrorKind::ParseError, std::string("code spec is missing ") + key);
    return it->second;
  };
  auto get_b = [&]() {
    if (!b) throw Error(ErrorKind::ParseError, "code spec is missing b");
    return *b;
  };

  CodeSpec spec{ring, FieldPower{}};
  if (family == "field-power") {
    spec.variant = FieldPower{get("i")};
  } else if (family == "chain") {
    spec.variant = ChainPrincipal{get("i")};
  } else if (family == "type1") {
    spec.variant = Type1{get("k")};
  } else if (family == "type2") {
    spec.variant = Type2{get("j"), get("k"), get_b()};
  } else if (family == "type3") {
    spec.variant = Type3{get("j"), get("k"), get("t"), get_b()};
  } else {
    throw Error(ErrorKind::ParseError, "unknown code family '" + std::string(family) + "'");
  }
  validate(spec);
  return spec;
}

bool has_zero_b(const CodeSpec& spec) {
  if (const auto* v = std::get_if<Type2>(&spec.variant)) return v->b.is_zero();
  if (const auto* v = std::get_if<Type3>(&spec.variant)) return v->b.is_zero();
  return false;
}

std::optional<long long> closed_form_log_size(const CodeSpec& spec) {
  const long long m = spec.ring.field().m();
  const long long n = spec.ring.n();
  const long long ps = spec.ring.ps();
  return std::visit(
      [&](const auto& v) -> std::optional<long long> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FieldPower>) {
          return m * (n * ps - n * v.i);
        } else if constexpr (std::is_same_v<V, ChainPrincipal>) {
          return m * n * (2 * ps - v.i);
        } else if constexpr (std::is_same_v<V, Type1>) {
          return 2 * m * n * (ps - v.k);
        } else if constexpr (std::is_same_v<V, Type2>) {
          return m * n * (ps - v.k);
        } else if constexpr (std::is_same_v<V, Type3>) {
          return m * n * (2 * ps - 2 * v.k - v.t);
        } else {
          return std::nullopt;
        }
      },
      spec.variant);
}

std::vector<QPoly> spec_generators(const CodeSpec& spec) {
  const QuotientRing& ring = spec.ring;
  const ChainElement u = ring.chain().u();
  return std::visit(
      [&](const auto& v) -> std::vector<QPoly> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FieldPower> || std::is_same_v<V, ChainPrincipal>) {
          return {ring.binom_power(v.i)};
        } else if constexpr (std::is_same_v<V, Type1>) {
          return {ring.binom_power(v.k)};
        } else if constexpr (std::is_same_v<V, Type2>) {
          return {qadd(qmul(ring.binom_power(v.j), v.b), qscale(u, ring.binom_power(v.k)))};
        } else if constexpr (std::is_same_v<V, Type3>) {
          return {qadd(qmul(ring.binom_power(v.j), v.b), qscale(u, ring.binom_power(v.k))),
                  ring.binom_power(v.k + v.t)};
        } else {
          violation("explicit codes carry their own generators");
        }
      },
      spec.variant);
}

CodeSpec table_form_spec(const QuotientRing& ring, int j, int k, const QPoly& b) {
  require_chain_beta_zero(ring, "table form");
  check_b(ring, b);
  const int ps = ring.ps();
  if (j < 0 || j > ps - 1 || k < 0) violation("table form needs 0 <= j <= p^s - 1 and k >= 0");
  CodeSpec spec{ring, Type1{j}};
  // With b = 0 or k >= j the generator is h^j times a unit.
  if (!b.is_zero() && k < j) {
    QPoly binv = field_inverse(b);
    if (2 * j >= ps + k) {
      spec.variant = Type2{j, k, std::move(binv)};
    } else {
      spec.variant = Type3{j, k, 2 * j - 2 * k, std::move(binv)};
    }
  }
  validate(spec);
  return spec;
}

std::optional<std::uint64_t> ConstacyclicCode::size() const {
  bool overflow = false;
  const std::uint64_t v = checked_power(ring().field().p(), dim_p(), overflow);
  if (overflow) return std::nullopt;
  return v;
}

ConstacyclicCode build_ideal(const QuotientRing& ring, const std::vector<QPoly>& generators, std::string label) {
  const int cols = ring.symbol_width() * ring.length();
  RowSpace basis(ring.field().p(), cols);
  const auto scalars = scalar_basis(ring);
  for (const QPoly& g : generators) {
    if (!(g.ring() == ring)) throw Error(ErrorKind::RingMismatch, "generator lives in a different ring");
    QPoly shifted = g;
    for (int t = 0; t < ring.length() && basis.rank() < cols; ++t) {
      for (const ChainElement& c : scalars) basis.insert(to_coordinates(qscale(c, shifted)));
      shifted = consta_shift(shifted);
    }
  }
  return ConstacyclicCode(CodeSpec{ring, Explicit{std::move(label)}}, generators, std::move(basis));
}

ConstacyclicCode build_code(const CodeSpec& spec) {
  validate(spec);
  ConstacyclicCode raw = build_ideal(spec.ring, spec_generators(spec), spec_key(spec));
  return ConstacyclicCode(spec, raw.generators(), raw.basis());
}

bool contains(const ConstacyclicCode& code, const QPoly& w) {
  if (!(w.ring() == code.ring())) throw Error(ErrorKind::RingMismatch, "word lives in a different ring");
  return code.basis().contains(to_coordinates(w));
}

ConstacyclicCode restrict_subfield(const ConstacyclicCode& code) {
  const QuotientRing& ring = code.ring();
  if (!ring.is_chain()) throw Error(ErrorKind::NotChainCode, "subfield subcode needs a chain-ring code");
  const int m = ring.field().m();
  const int N = ring.length();
  const int w = 2 * m;
  const int u_cols = m * N;
  // Columns reordered so every u-coordinate precedes every field coordinate; after
  // elimination the rows pivoting past u_cols have no u-part.
  auto permuted_index = [&](int col) {
    const int t = col / w, e = col % w;
    return e < m ? u_cols + t * m + e : t * m + (e - m);
  };
  RowSpace eliminated(ring.field().p(), w * N);
  for (const auto& row : code.basis().rows()) {
    RowSpace::Row permuted(row.size(), 0);
    for (int c = 0; c < w * N; ++c) permuted[static_cast<std::size_t>(permuted_index(c))] = row[static_cast<std::size_t>(c)];
    eliminated.insert(permuted);
  }
  QuotientRing field_ring = ring.field_counterpart();
  RowSpace restricted(ring.field().p(), m * N);
  for (std::size_t r = 0; r < eliminated.rows().size(); ++r) {
    if (eliminated.pivots()[r] < u_cols) continue;
    const auto& row = eliminated.rows()[r];
    restricted.insert(std::span<const std::uint16_t>(row).subspan(static_cast<std::size_t>(u_cols)));
  }
  return ConstacyclicCode(CodeSpec{field_ring, Explicit{"subfield(" + spec_key(code.spec()) + ")"}}, {},
                          std::move(restricted));
}

CodewordWalker::CodewordWalker(int p, int rows, std::uint64_t start_index)
    : p_(p), digits_(static_cast<std::size_t>(rows), 0), index_(start_index) {
  for (auto& d : digits_) {
    d = static_cast<int>(start_index % static_cast<std::uint64_t>(p));
    start_index /= static_cast<std::uint64_t>(p);
  }
}

std::vector<Coord> codeword_at(const ConstacyclicCode& code, std::uint64_t index) {
  const RowSpace& basis = code.basis();
  const int p = basis.p();
  std::vector<Coord> word(static_cast<std::size_t>(basis.cols()), 0);
  for (const auto& row : basis.rows()) {
    const int digit = static_cast<int>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
    for (int c = 0; c < basis.cols(); ++c) {
      if (row[c] != 0) word[c] = static_cast<Coord>((word[c] + digit * row[c]) % p);
    }
  }
  return word;
}

std::vector<Coord> random_codeword(const ConstacyclicCode& code, std::mt19937_64& rng) {
  const RowSpace& basis = code.basis();
  const int p = basis.p();
  std::uniform_int_distribution<int> digit(0, p - 1);
  std::vector<Coord> word(static_cast<std::size_t>(basis.cols()), 0);
  for (const auto& row : basis.rows()) {
    const int d = digit(rng);
    if (d == 0) continue;
    for (int c = 0; c < basis.cols(); ++c) {
      if (row[c] != 0) word[c] = static_cast<Coord>((word[c] + d * row[c]) % p);
    }
  }
  return word;
}

EnumerationStatus enumerate(const ConstacyclicCode& code, std::uint64_t budget, const CodewordVisitor& visit) {
  const auto total = code.size();
  if (!total || *total > budget) return EnumerationStatus::Exhausted;
  const RowSpace& basis = code.basis();
  std::vector<Coord> word(static_cast<std::size_t>(basis.cols()), 0);
  CodewordWalker walker(basis.p(), basis.rank(), 0);
  do {
    visit(walker.index(), word);
  } while (walker.advance([&](int r) { add_row(word, basis.rows()[static_cast<std::size_t>(r)], basis.p()); }));
  return EnumerationStatus::Complete;
}

QPoly random_field_unit(const QuotientRing& ring, std::mt19937_64& rng) {
  const Field& F = ring.field();
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.q() - 1);
  for (;;) {
    std::vector<ChainElement> c(static_cast<std::size_t>(ring.length()));
    for (auto& x : c) x = {{coeff(rng)}, F.zero()};
    QPoly b(ring, std::move(c));
    if (is_field_unit(b)) return b;
  }
}

}  // namespace sympair
