// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sympair/theory.hpp"

using namespace sympair;

namespace {

struct Check {
  int failures = 0;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 5) detail << "  " << what << "\n";
  }
};

struct Params {
  int p, m, s, n;
};

// (p, m, s, n) from the field grid with gcd(n, p) = 1 and some x^n - lambda irreducible.
std::vector<Params> field_grid() {
  std::vector<Params> out;
  for (int p : {2, 3, 5}) {
    for (int m : {1, 2}) {
      const Field F = Field::build(p, m);
      for (int s : {1, 2}) {
        for (int n : {1, 2, 3}) {
          if (n % p == 0 || irreducible_binomial_constants(F, n).empty()) continue;
          out.push_back({p, m, s, n});
        }
      }
    }
  }
  return out;
}

QuotientRing field_ring(const Params& g) {
  const Field F = Field::build(g.p, g.m);
  return QuotientRing::field_ring(F, g.n, g.s, irreducible_binomial_constants(F, g.n).front());
}

QuotientRing chain_ring(int p, int n, int s, int beta) {
  const Field F = Field::build(p, 1);
  return QuotientRing::chain_ring(F, n, s, irreducible_binomial_constants(F, n).front(), F.from_int(beta));
}

std::string label(const Params& g, int i) {
  std::ostringstream os;
  os << "p=" << g.p << " m=" << g.m << " s=" << g.s << " n=" << g.n << " i=" << i;
  return os.str();
}

bool fits(int p, long long log_size) {
  return static_cast<double>(log_size) * std::log2(static_cast<double>(p)) <= 21.0;
}

DistanceReport exhaustive(const ConstacyclicCode& code) {
  return min_distance_brute(code, Metric::Pair);
}

Check criterion1() {
  Check c;
  int compared = 0;
  for (const Params& g : field_grid()) {
    const QuotientRing R = field_ring(g);
    const int ps = R.max_exponent();
    for (int i = 0; i < ps; ++i) {
      const CodeSpec spec{R, FieldPower{i}};
      if (!fits(g.p, *closed_form_log_size(spec))) continue;
      const DistanceReport r = exhaustive(build_code(spec));
      const int f = dsp_formula_field(g.n, g.p, g.s, i).value;
      c.expect(r.method == DistanceMethod::Exhaustive && r.d_sp == f,
               label(g, i) + ": oracle " + std::to_string(r.d_sp) + " formula " + std::to_string(f));
      ++compared;
    }
  }
  c.expect(compared > 0, "no codes compared");
  c.detail << "  " << compared << " codes compared\n";
  return c;
}

Check criterion2() {
  Check c;
  const QuotientRing R = chain_ring(3, 1, 2, 0);
  const CodeSpec spec{R, Type2{7, 1, R.one()}};
  const DistanceReport r = exhaustive(build_code(spec));
  c.expect(r.examined == 6561, "examined " + std::to_string(r.examined));
  c.expect(r.method == DistanceMethod::Exhaustive, "not exhaustive");
  c.expect(r.d_sp == 4 && r.d_sp != 9, "d_sp " + std::to_string(r.d_sp));
  c.expect(dsp_formula_chain(spec).value == 4, "formula disagrees");
  return c;
}

Check criterion3() {
  Check c;
  const Field F = Field::build(2, 1);
  const QuotientRing R = QuotientRing::chain_ring(F, 1, 3, F.one(), F.zero());
  const CodeSpec spec{R, Type2{5, 0, R.one()}};
  const DistanceReport r = exhaustive(build_code(spec));
  c.expect(r.examined == 256, "examined " + std::to_string(r.examined));
  c.expect(r.d_sp == 4, "d_sp " + std::to_string(r.d_sp));
  const MdsVerdict v = singleton_defect(spec, r.d_sp);
  c.expect(v.singleton_defect > 0 && !v.is_mds, "code meets the bound");
  c.expect(dsp_formula_chain(spec).value == 4, "formula disagrees");
  return c;
}

// MDS exponents of the field family, from the oracle and from the formula.
Check criterion4() {
  Check c;
  {
    const QuotientRing R = field_ring({3, 1, 1, 2});
    std::set<int> by_oracle, by_formula;
    for (int i = 0; i <= R.max_exponent(); ++i) {
      const CodeSpec spec{R, FieldPower{i}};
      if (singleton_defect(spec, exhaustive(build_code(spec)).d_sp).is_mds) by_oracle.insert(i);
      if (singleton_defect(spec, dsp_formula_chain(spec).value).is_mds) by_formula.insert(i);
    }
    c.expect(by_oracle == std::set<int>{0, 1, 2}, "p=3 s=1 n=2: oracle MDS set differs");
    c.expect(by_formula == std::set<int>{0, 1, 2}, "p=3 s=1 n=2: formula MDS set differs");
    c.expect(dsp_formula_field(2, 3, 1, 1).value == 4 && dsp_formula_field(2, 3, 1, 2).value == 6,
             "p=3 s=1 n=2: distances differ");
  }
  {
    const QuotientRing R = field_ring({3, 1, 2, 1});
    for (auto [i, d] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {4, 6}, {7, 9}}) {
      const CodeSpec spec{R, FieldPower{i}};
      const DistanceReport r = exhaustive(build_code(spec));
      const int f = dsp_formula_chain(spec).value;
      c.expect(r.method == DistanceMethod::Exhaustive && r.d_sp == d && f == d,
               "p=3 s=2 n=1 i=" + std::to_string(i) + ": oracle " + std::to_string(r.d_sp) + " formula " +
                   std::to_string(f));
      c.expect(singleton_defect(spec, r.d_sp).is_mds, "p=3 s=2 n=1 i=" + std::to_string(i) + " not MDS");
    }
    std::set<int> listed;
    for (auto [i, d] : table1_mds(1, 3, 2)) listed.insert(i);
    c.expect(listed.count(1) && listed.count(2) && listed.count(4) && listed.count(7), "table rows missing");
  }
  return c;
}

Check criterion5() {
  Check c;
  int rings = 0;
  for (int p : {2, 3}) {
    for (int s : {1, 2}) {
      for (int n : {1, 2}) {
        const Field F = Field::build(p, 1);
        if (n % p == 0 || irreducible_binomial_constants(F, n).empty()) continue;
        for (int beta = 1; beta < p; ++beta) {
          const QuotientRing R = chain_ring(p, n, s, beta);
          ++rings;
          for (const MdsVerdict& v : mds_classify(R)) {
            const bool full = v.key == "chain:i=0";
            c.expect(v.is_mds == full, "p=" + std::to_string(p) + " s=" + std::to_string(s) + " n=" +
                                           std::to_string(n) + " beta=" + std::to_string(beta) + ": " + v.key);
            if (!full) c.expect(v.singleton_defect > 0, v.key + " has defect " + std::to_string(v.singleton_defect));
          }
        }
      }
    }
  }
  c.detail << "  " << rings << " rings classified\n";
  return c;
}

// Generators written out literally: h + u b and h^(p-1) + u h^(p-2) b.
Check criterion6() {
  Check c;
  const int p = 3;
  const QuotientRing R = chain_ring(p, 2, 1, 0);
  const QPoly u = R.monomial(0, R.chain().u());
  std::mt19937_64 rng(1);
  std::vector<QPoly> bs{R.zero()};
  for (int k = 0; k < 3; ++k) bs.push_back(random_field_unit(R, rng));
  for (const QPoly& b : bs) {
    const QPoly h = R.binom_power(1);
    const std::vector<std::pair<QPoly, int>> cases{
        {qadd(h, qmul(u, b)), 4},
        {qadd(R.binom_power(p - 1), qmul(qmul(u, R.binom_power(p - 2)), b)), 2 * p},
    };
    for (const auto& [g, d] : cases) {
      const ConstacyclicCode code = build_ideal(R, {g}, format_qpoly(g));
      const DistanceReport r = exhaustive(code);
      const MdsVerdict v = singleton_defect(R, format_qpoly(g), code.dim_p(), r.d_sp);
      c.expect(r.method == DistanceMethod::Exhaustive && r.d_sp == d,
               format_qpoly(g) + ": d_sp " + std::to_string(r.d_sp) + ", expected " + std::to_string(d));
      c.expect(v.is_mds, format_qpoly(g) + " not MDS, defect " + std::to_string(v.singleton_defect));
    }
  }
  return c;
}

Check criterion7() {
  Check c;
  int compared = 0;
  for (const Params& g : field_grid()) {
    const QuotientRing R = field_ring(g);
    const Field& F = R.field();
    for (int i = 0; i < R.max_exponent(); ++i) {
      const int expanded = oracle::term_count(oracle::binomial_power(F, g.n, R.alpha0(), i));
      c.expect(wtH_binom_power(g.p, g.s, i) == expanded, label(g, i));
      ++compared;
    }
  }
  c.detail << "  " << compared << " exponents compared\n";
  return c;
}

Check criterion8() {
  Check c;
  std::mt19937_64 rng(8);
  int codes = 0;
  for (const Params& g : field_grid()) {
    const QuotientRing R = field_ring(g);
    int previous = -1;
    std::optional<int> previous_oracle;
    for (int i = 0; i < R.max_exponent(); ++i) {
      const CodeSpec spec{R, FieldPower{i}};
      const ConstacyclicCode code = build_code(spec);
      ++codes;
      c.expect(code.dim_p() == *closed_form_log_size(spec), label(g, i) + ": dim_p");
      for (int k = 0; k < 1000; ++k) {
        const QPoly w = from_coordinates(R, random_codeword(code, rng));
        if (!contains(code, consta_shift(w))) {
          c.expect(false, label(g, i) + ": shift leaves the code");
          break;
        }
      }
      const int f = dsp_formula_field(g.n, g.p, g.s, i).value;
      c.expect(f >= previous, label(g, i) + ": formula decreases");
      previous = f;
      if (fits(g.p, code.dim_p())) {
        const int o = exhaustive(code).d_sp;
        c.expect(!previous_oracle || o >= *previous_oracle, label(g, i) + ": oracle decreases");
        previous_oracle = o;
      } else {
        previous_oracle.reset();
      }
    }
  }
  c.detail << "  " << codes << " codes checked\n";
  return c;
}

Check criterion9() {
  Check c;
  std::mt19937_64 rng(9);
  int configs = 0;
  for (auto [q, N] : std::vector<std::pair<Symbol, int>>{{2, 2}, {2, 8}, {3, 9}, {4, 12}, {5, 25}, {9, 18}, {25, 75}}) {
    ++configs;
    std::uniform_real_distribution<double> density(0.02, 0.98);
    std::uniform_int_distribution<Symbol> val(1, q - 1);
    for (int trial = 0; trial < 10000; ++trial) {
      std::bernoulli_distribution nz(density(rng));
      std::vector<Symbol> x(static_cast<std::size_t>(N)), y(static_cast<std::size_t>(N));
      for (int k = 0; k < N; ++k) {
        x[static_cast<std::size_t>(k)] = rng() % q;
        y[static_cast<std::size_t>(k)] =
            nz(rng) ? (x[static_cast<std::size_t>(k)] + val(rng)) % q : x[static_cast<std::size_t>(k)];
      }
      const int dh = d_H(x, y), dsp = d_sp(x, y);
      c.expect(dh <= dsp && dsp <= 2 * dh, "bounds");
      if (dh > 0 && dh < N) {
        const BlockDecomposition bd = block_decomposition(x, y);
        c.expect(bd.d_sp == dsp && dsp == dh + bd.L, "d_sp != d_H + L");
      }
    }
  }
  c.detail << "  " << configs << " configurations, 10000 pairs each\n";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"field formula equals exhaustive oracle on the grid", criterion1},
      {"type2 j=7 k=1 b=1 over GF(3)+uGF(3) has d_sp 4", criterion2},
      {"type2 j=5 k=0 b=1 over GF(2)+uGF(2) has d_sp 4 and is not MDS", criterion3},
      {"field MDS table rows at (3,1,2) and (3,2,1)", criterion4},
      {"beta != 0 is MDS only for the full space", criterion5},
      {"literal generators h+ub and h^(p-1)+uh^(p-2)b are MDS", criterion6},
      {"Hamming weight of binomial powers equals expanded term count", criterion7},
      {"size, shift stability and monotone distance", criterion8},
      {"metric identities on random pairs", criterion9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      c = criteria[k].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.failures == 0 ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << "\n"
              << c.detail.str() << std::flush;
    failed += c.failures != 0;
  }
  return failed == 0 ? 0 : 1;
}
