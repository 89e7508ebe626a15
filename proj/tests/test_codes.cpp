#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sympair/codes.hpp"

using namespace sympair;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

const Field& gf(int p, int m = 1) {
  static std::map<std::pair<int, int>, Field> cache;
  auto it = cache.find({p, m});
  if (it == cache.end()) it = cache.emplace(std::pair{p, m}, Field::build(p, m)).first;
  return it->second;
}

QuotientRing field_ring(int p, int n, int s, int alpha0) {
  return QuotientRing::field_ring(gf(p), n, s, gf(p).from_int(alpha0));
}

QuotientRing chain_ring(int p, int n, int s, int alpha0, int beta) {
  return QuotientRing::chain_ring(gf(p), n, s, gf(p).from_int(alpha0), gf(p).from_int(beta));
}

QPoly constant(const QuotientRing& R, int c) { return R.monomial(0, {R.field().from_int(c), R.field().zero()}); }

std::vector<Coord> as_coords(std::span<const Coord> w) { return {w.begin(), w.end()}; }

std::vector<std::vector<int>> shift_matrix(const QPoly& g) {
  std::vector<std::vector<int>> rows;
  QPoly w = g;
  for (int t = 0; t < g.ring().length(); ++t) {
    const auto c = to_coordinates(w);
    rows.emplace_back(c.begin(), c.end());
    w = consta_shift(w);
  }
  return rows;
}

}  // namespace

TEST(BuildCode, Examples) {
  const auto R = field_ring(3, 2, 1, 2);
  const auto full = build_code({R, FieldPower{0}});
  EXPECT_EQ(full.dim_p(), R.length());

  const auto c1 = build_code({R, FieldPower{1}});
  EXPECT_EQ(c1.dim_p(), 4);
  EXPECT_EQ(c1.size(), std::optional<std::uint64_t>(81));
  EXPECT_EQ(oracle::rank_mod_p(shift_matrix(R.binom_power(1)), 3), 4);

  const auto C = chain_ring(3, 1, 2, 1, 0);
  const auto d = build_code({C, Type2{7, 1, constant(C, 1)}});
  EXPECT_EQ(d.size(), std::optional<std::uint64_t>(6561));

  const Field& F9 = gf(3, 2);
  const auto R9 = QuotientRing::field_ring(F9, 2, 1, irreducible_binomial_constants(F9, 2).front());
  EXPECT_EQ(build_code({R9, FieldPower{0}}).dim_p(), 2 * R9.length());
}

TEST(BuildCode, ValidationErrors) {
  const auto R = field_ring(3, 2, 1, 2);
  const auto C0 = chain_ring(3, 1, 2, 1, 0);
  const auto C1 = chain_ring(3, 1, 2, 1, 1);
  EXPECT_EQ(kind_of([&] { build_code({C1, Type1{2}}); }), ErrorKind::BetaMismatch);
  EXPECT_EQ(kind_of([&] { build_code({C0, ChainPrincipal{2}}); }), ErrorKind::BetaMismatch);
  EXPECT_EQ(kind_of([&] { build_code({R, Type1{1}}); }), ErrorKind::ConstraintViolation);
  EXPECT_EQ(kind_of([&] { build_code({C0, FieldPower{1}}); }), ErrorKind::ConstraintViolation);
  EXPECT_EQ(kind_of([&] { build_code({R, FieldPower{4}}); }), ErrorKind::ConstraintViolation);
  // ceil((9 + 1) / 2) = 5 <= j
  EXPECT_EQ(kind_of([&] { build_code({C0, Type2{4, 1, constant(C0, 1)}}); }), ErrorKind::ConstraintViolation);
  EXPECT_EQ(kind_of([&] { build_code({C0, Type3{1, 0, 9, constant(C0, 1)}}); }), ErrorKind::ConstraintViolation);
  // x - 1 is not a unit modulo (x - 1)^9
  const QPoly nonunit = C0.binom_power(1);
  EXPECT_EQ(kind_of([&] { build_code({C0, Type2{7, 1, nonunit}}); }), ErrorKind::NotUnitNorZero);
  EXPECT_EQ(kind_of([&] { build_code({C0, Type2{7, 1, C0.monomial(0, C0.chain().u())}}); }),
            ErrorKind::NotUnitNorZero);
}

TEST(BuildCode, DimensionMatchesClosedFormForEveryVariant) {
  std::mt19937_64 rng(41);
  for (const auto& R : {field_ring(3, 2, 1, 2), field_ring(2, 1, 2, 1), field_ring(5, 2, 1, 2)}) {
    for (int i = 0; i <= R.ps(); ++i) {
      const CodeSpec spec{R, FieldPower{i}};
      EXPECT_EQ(build_code(spec).dim_p(), *closed_form_log_size(spec)) << spec_key(spec);
    }
  }
  for (const auto& C : {chain_ring(3, 1, 1, 1, 1), chain_ring(2, 1, 2, 1, 1), chain_ring(3, 2, 1, 2, 1)}) {
    for (int i = 0; i <= 2 * C.ps(); ++i) {
      const CodeSpec spec{C, ChainPrincipal{i}};
      EXPECT_EQ(build_code(spec).dim_p(), *closed_form_log_size(spec)) << spec_key(spec);
    }
  }
  for (const auto& C : {chain_ring(3, 1, 1, 1, 0), chain_ring(2, 1, 2, 1, 0), chain_ring(3, 2, 1, 2, 0)}) {
    const int ps = C.ps();
    std::vector<QPoly> bs{C.zero(), random_field_unit(C, rng)};
    for (int k = 0; k <= ps; ++k) {
      const CodeSpec spec{C, Type1{k}};
      EXPECT_EQ(build_code(spec).dim_p(), *closed_form_log_size(spec)) << spec_key(spec);
    }
    for (int k = 0; k <= ps - 1; ++k) {
      for (int j = (ps + k + 1) / 2; j <= ps - 1; ++j) {
        for (const auto& b : bs) {
          const CodeSpec spec{C, Type2{j, k, b}};
          EXPECT_EQ(build_code(spec).dim_p(), *closed_form_log_size(spec)) << spec_key(spec);
        }
      }
    }
    for (int k = 0; k <= ps - 2; ++k) {
      for (int t = 1; t <= ps - k - 1; ++t) {
        for (int j = k + (t + 1) / 2; j <= k + t; ++j) {
          for (const auto& b : bs) {
            const CodeSpec spec{C, Type3{j, k, t, b}};
            EXPECT_EQ(build_code(spec).dim_p(), *closed_form_log_size(spec)) << spec_key(spec);
          }
        }
      }
    }
  }
}

TEST(BuildCode, NestedIdeals) {
  for (const auto& R : {field_ring(3, 1, 2, 1), field_ring(2, 1, 3, 1)}) {
    for (int i = 0; i <= R.ps(); ++i) {
      const auto Ci = build_code({R, FieldPower{i}});
      for (int j = i; j <= R.ps(); ++j) {
        EXPECT_TRUE(Ci.basis().contains(build_code({R, FieldPower{j}}).basis())) << i << " " << j;
      }
      if (i > 0) EXPECT_FALSE(build_code({R, FieldPower{i}}).basis().contains(build_code({R, FieldPower{i - 1}}).basis()));
    }
  }
}

TEST(Enumerate, Examples) {
  const auto R = field_ring(3, 2, 1, 2);
  std::vector<std::vector<Coord>> words;
  EXPECT_EQ(enumerate(build_code({R, FieldPower{3}}), kDefaultBudget,
                      [&](std::uint64_t, std::span<const Coord> w) { words.push_back(as_coords(w)); }),
            EnumerationStatus::Complete);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_TRUE(from_coordinates(R, words[0]).is_zero());

  words.clear();
  const auto c1 = build_code({R, FieldPower{1}});
  enumerate(c1, kDefaultBudget, [&](std::uint64_t, std::span<const Coord> w) { words.push_back(as_coords(w)); });
  EXPECT_EQ(words.size(), 81u);
  EXPECT_EQ(std::set<std::vector<Coord>>(words.begin(), words.end()).size(), 81u);
  const Field& F = R.field();
  const oracle::Poly g{F.one(), F.zero(), F.one()};  // x^2 + 1
  for (const auto& w : words) {
    oracle::Poly f;
    const QPoly v = from_coordinates(R, w);
    for (const auto& c : v.coeffs()) f.push_back(c.a);
    EXPECT_TRUE(oracle::poly_mod(F, f, g).empty()) << format_qpoly(v);
  }

  const auto C = chain_ring(3, 1, 2, 1, 0);
  const auto d = build_code({C, Type2{7, 1, constant(C, 1)}});
  int visits = 0;
  EXPECT_EQ(enumerate(d, 10, [&](std::uint64_t, std::span<const Coord>) { ++visits; }), EnumerationStatus::Exhausted);
  EXPECT_EQ(visits, 0);
}

TEST(Enumerate, IndicesMatchCodewordAt) {
  const auto C = chain_ring(2, 1, 2, 1, 0);
  const auto code = build_code({C, Type3{2, 1, 2, constant(C, 1)}});
  std::uint64_t expected = 0;
  enumerate(code, kDefaultBudget, [&](std::uint64_t idx, std::span<const Coord> w) {
    EXPECT_EQ(idx, expected++);
    EXPECT_EQ(as_coords(w), codeword_at(code, idx));
  });
  EXPECT_EQ(expected, *code.size());
}

TEST(Enumerate, WordsAreMembersAndShiftStable) {
  std::mt19937_64 rng(43);
  const auto C = chain_ring(3, 2, 1, 2, 0);
  for (const CodeSpec& spec : {CodeSpec{C, Type1{1}}, CodeSpec{C, Type2{2, 1, random_field_unit(C, rng)}},
                               CodeSpec{C, Type3{1, 0, 2, random_field_unit(C, rng)}}}) {
    const auto code = build_code(spec);
    enumerate(code, kDefaultBudget, [&](std::uint64_t, std::span<const Coord> w) {
      const QPoly v = from_coordinates(C, as_coords(w));
      EXPECT_TRUE(contains(code, v));
      EXPECT_TRUE(contains(code, consta_shift(v)));
    });
  }
}

TEST(Contains, Examples) {
  const auto R = field_ring(3, 2, 1, 2);
  const auto c1 = build_code({R, FieldPower{1}});
  EXPECT_TRUE(contains(c1, R.zero()));
  EXPECT_TRUE(contains(c1, R.binom_power(1)));
  EXPECT_FALSE(contains(c1, R.one()));
  EXPECT_EQ(kind_of([&] { contains(c1, field_ring(3, 1, 1, 1).one()); }), ErrorKind::RingMismatch);
}

TEST(Subfield, Examples) {
  const auto C = chain_ring(3, 1, 2, 1, 0);
  const QPoly u = C.monomial(0, C.chain().u());
  const auto ug = build_ideal(C, {qmul(u, C.binom_power(2))}, "u*g");
  EXPECT_EQ(restrict_subfield(ug).dim_p(), 0);

  const auto full = build_code({C, Type1{0}});
  EXPECT_EQ(restrict_subfield(full).dim_p(), C.length());

  const auto F = C.field_counterpart();
  for (int k = 0; k <= C.ps(); ++k) {
    const auto sub = restrict_subfield(build_code({C, Type1{k}}));
    const auto field_code = build_code({F, FieldPower{k}});
    EXPECT_EQ(sub.dim_p(), field_code.dim_p());
    EXPECT_TRUE(sub.basis().contains(field_code.basis()));
  }
  EXPECT_EQ(kind_of([&] { restrict_subfield(build_code({F, FieldPower{1}})); }), ErrorKind::NotChainCode);
}

TEST(ChainPrincipal, UpperHalfIsUTimesFieldCode) {
  const auto C = chain_ring(3, 1, 2, 1, 2);
  const auto F = C.field_counterpart();
  for (int i = C.ps() + 1; i <= 2 * C.ps(); ++i) {
    const auto code = build_code({C, ChainPrincipal{i}});
    const auto field_code = build_code({F, FieldPower{i - C.ps()}});
    EXPECT_EQ(code.dim_p(), field_code.dim_p());
    enumerate(code, kDefaultBudget, [&](std::uint64_t, std::span<const Coord> w) {
      const QPoly v = from_coordinates(C, as_coords(w));
      std::vector<ChainElement> a;
      for (const auto& c : v.coeffs()) {
        EXPECT_EQ(c.a.code, 0u);
        a.push_back({c.b, C.field().zero()});
      }
      EXPECT_TRUE(contains(field_code, QPoly(F, a)));
    });
  }
}

TEST(SpecText, RoundTrip) {
  std::mt19937_64 rng(47);
  const auto C = chain_ring(3, 1, 2, 1, 0);
  const QPoly b = random_field_unit(C, rng);
  for (const CodeSpec& spec : {CodeSpec{C, Type1{3}}, CodeSpec{C, Type2{7, 1, b}}, CodeSpec{C, Type3{3, 1, 4, b}},
                               CodeSpec{C, Type2{7, 1, C.zero()}}}) {
    const CodeSpec back = parse_code_spec(C, spec_key(spec));
    EXPECT_EQ(spec_key(back), spec_key(spec));
  }
  EXPECT_EQ(spec_key(parse_code_spec(C, "type2:j=7,k=1,b=1")), "type2:j=7,k=1,b=1");
  const auto R = field_ring(3, 2, 1, 2);
  EXPECT_EQ(spec_key(parse_code_spec(R, "field-power:i=2")), "field-power:i=2");
  EXPECT_EQ(spec_key(parse_code_spec(chain_ring(3, 1, 2, 1, 1), "chain:i=10")), "chain:i=10");
  EXPECT_EQ(kind_of([&] { parse_code_spec(R, "field-power"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { parse_code_spec(R, "nope:i=1"); }), ErrorKind::ParseError);
}

TEST(TableForm, MatchesLiteralGenerator) {
  std::mt19937_64 rng(53);
  for (const auto& C : {chain_ring(3, 1, 2, 1, 0), chain_ring(3, 2, 1, 2, 0), chain_ring(2, 1, 3, 1, 0)}) {
    const QPoly u = C.monomial(0, C.chain().u());
    for (const QPoly& b : {C.zero(), random_field_unit(C, rng)}) {
      for (int j = 0; j <= C.ps() - 1; ++j) {
        for (int k = 0; k <= C.ps() - 1; ++k) {
          const QPoly g = qadd(C.binom_power(j), qmul(u, qmul(C.binom_power(k), b)));
          const auto literal = build_ideal(C, {g}, "literal");
          const CodeSpec spec = table_form_spec(C, j, k, b);
          const auto code = build_code(spec);
          EXPECT_EQ(literal.dim_p(), code.dim_p()) << j << " " << k << " " << spec_key(spec);
          EXPECT_TRUE(literal.basis().contains(code.basis())) << j << " " << k;
        }
      }
    }
  }
}

TEST(RandomCodeword, StaysInCode) {
  std::mt19937_64 rng(59);
  const auto C = chain_ring(5, 1, 1, 2, 0);
  const auto code = build_code({C, Type3{2, 1, 2, random_field_unit(C, rng)}});
  for (int t = 0; t < 200; ++t) EXPECT_TRUE(contains(code, from_coordinates(C, random_codeword(code, rng))));
}
