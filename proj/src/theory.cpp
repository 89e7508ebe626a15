#include "sympair/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <type_traits>

namespace sympair {

namespace {

int ipow(int base, int e) {
  int out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

int ceil_half(int v) { return (v + 1) / 2; }

void require_exponent(int i, int lo, int hi) {
  if (i < lo || i > hi) {
    throw Error(ErrorKind::ExponentOutOfRange,
                "exponent " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

BranchWitness make_branch(std::string name, int value, std::optional<IntervalPosition> pos = std::nullopt) {
  BranchWitness w;
  w.branch = std::move(name);
  w.value = value;
  if (pos) {
    w.k = pos->k;
    w.theta = pos->theta;
    w.gamma = pos->gamma;
  }
  return w;
}

// log_p(p^e) <= log_p(budget)
bool fits_budget(int p, long long log_size, std::uint64_t budget) {
  return static_cast<double>(log_size) * std::log(static_cast<double>(p)) <=
         std::log(static_cast<double>(budget)) + 1e-9;
}

}  // namespace

IntervalPosition locate_exponent(int p, int s, int i) {
  const int ps = ipow(p, s);
  require_exponent(i, 1, ps - 1);
  for (int k = 0; k < s; ++k) {
    const int base = ps - ipow(p, s - k);
    const int width = ipow(p, s - k - 1);
    if (i > base && i <= base + (p - 1) * width) {
      const int theta = (i - base - 1) / width;
      return {k, theta, i - base - theta * width};
    }
  }
  throw std::logic_error("interval partition does not cover the exponent");
}

int wtH_binom_power(int p, int s, int i) {
  require_exponent(i, 0, ipow(p, s) - 1);
  int weight = 1;
  for (int d = 0; d < s; ++d) {
    weight *= i % p + 1;
    i /= p;
  }
  return weight;
}

int dH_formula(int p, int s, int i) {
  const int ps = ipow(p, s);
  require_exponent(i, 0, ps);
  if (i == 0) return 1;
  if (i == ps) return 0;
  const IntervalPosition pos = locate_exponent(p, s, i);
  return (pos.theta + 2) * ipow(p, pos.k);
}

std::vector<BranchWitness> field_branches(int n, int p, int s, int i) {
  const int ps = ipow(p, s);
  require_exponent(i, 0, ps);
  std::vector<BranchWitness> out;
  if (i == 0) {
    out.push_back(make_branch("trivial-full", 2));
    return out;
  }
  if (i == ps) {
    out.push_back(make_branch("trivial-zero", 0));
    return out;
  }
  const IntervalPosition pos = locate_exponent(p, s, i);

  if (n >= 2) {
    for (int k = 0; k <= s - 1; ++k) {
      for (int theta = 0; theta <= p - 2; ++theta) {
        const int lo = ps - ipow(p, s - k) + theta * ipow(p, s - k - 1) + 1;
        const int hi = ps - ipow(p, s - k) + (theta + 1) * ipow(p, s - k - 1);
        if (lo <= i && i <= hi) out.push_back(make_branch("general", 2 * (theta + 2) * ipow(p, k), pos));
      }
    }
    return out;
  }

  // n = 1
  for (int k = 0; k <= s - 2; ++k) {
    const int base = ps - ipow(p, s - k);
    if (i == base + 1) out.push_back(make_branch("n1-3pk", 3 * ipow(p, k), pos));
    if (base + 2 <= i && i <= base + ipow(p, s - k - 1)) out.push_back(make_branch("n1-4pk", 4 * ipow(p, k), pos));
    for (int theta = 1; theta <= p - 2; ++theta) {
      const int lo = base + theta * ipow(p, s - k - 1) + 1;
      const int hi = base + (theta + 1) * ipow(p, s - k - 1);
      if (lo <= i && i <= hi) out.push_back(make_branch("n1-theta", 2 * (theta + 2) * ipow(p, k), pos));
    }
  }
  for (int theta = 1; theta <= p - 2; ++theta) {
    if (i == ps - p + theta) out.push_back(make_branch("n1-top", (theta + 2) * ipow(p, s - 1), pos));
  }
  if (i == ps - 1) out.push_back(make_branch("n1-last", ps, pos));
  return out;
}

BranchWitness dsp_formula_field(int n, int p, int s, int i) {
  if (n < 1 || n % p == 0) throw Error(ErrorKind::ConstraintViolation, "need n >= 1 with gcd(n, p) = 1");
  auto branches = field_branches(n, p, s, i);
  if (branches.size() != 1) {
    throw std::logic_error("field distance branches are not a partition at i = " + std::to_string(i));
  }
  return branches.front();
}

ChainFormula dsp_formula_chain(const CodeSpec& spec) {
  validate(spec);
  const QuotientRing& ring = spec.ring;
  const int n = ring.n(), p = ring.field().p(), s = ring.s(), ps = ring.ps();
  auto at = [&](int exponent) {
    ChainFormula f;
    f.branch = dsp_formula_field(n, p, s, exponent);
    f.value = f.branch.value;
    f.field_exponent = exponent;
    return f;
  };
  return std::visit(
      [&](const auto& v) -> ChainFormula {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FieldPower>) {
          return at(v.i);
        } else if constexpr (std::is_same_v<V, ChainPrincipal>) {
          if (v.i <= ps) {
            ChainFormula f;
            f.value = 2;
            f.branch = make_branch("chain-contains-u", 2);
            return f;
          }
          return at(v.i - ps);
        } else if constexpr (std::is_same_v<V, Type1>) {
          return at(v.k);
        } else if constexpr (std::is_same_v<V, Type2>) {
          return v.b.is_zero() ? at(v.k) : at(ps - v.j + v.k);
        } else if constexpr (std::is_same_v<V, Type3>) {
          return v.b.is_zero() ? at(v.k) : at(2 * v.k + v.t - v.j);
        } else {
          throw Error(ErrorKind::ConstraintViolation, "no closed form for explicit codes");
        }
      },
      spec.variant);
}

int dH_formula_spec(const CodeSpec& spec) {
  const ChainFormula f = dsp_formula_chain(spec);
  if (!f.field_exponent) return 1;
  return dH_formula(spec.ring.field().p(), spec.ring.s(), *f.field_exponent);
}

MdsVerdict singleton_defect(const QuotientRing& ring, std::string key, long long log_size, int d_sp) {
  const long long alphabet_log = ring.symbol_width();
  const long long N = ring.length();
  MdsVerdict v;
  v.key = std::move(key);
  v.d_sp = d_sp;
  v.log_size = log_size;
  v.bound_log = (N - d_sp + 2) * alphabet_log;
  v.singleton_defect = v.bound_log - log_size;
  v.is_mds = v.singleton_defect == 0;
  v.trivial = log_size == 0 || log_size == N * alphabet_log;
  return v;
}

MdsVerdict singleton_defect(const CodeSpec& spec, int d_sp) {
  const auto log_size = closed_form_log_size(spec);
  if (!log_size) throw Error(ErrorKind::ConstraintViolation, "no closed-form size for explicit codes");
  return singleton_defect(spec.ring, spec_key(spec), *log_size, d_sp);
}

std::vector<CodeSpec> enumerate_specs(const QuotientRing& ring, const ClassifyOptions& options) {
  std::vector<CodeSpec> out;
  const int ps = ring.ps();
  if (!ring.is_chain()) {
    for (int i = 0; i <= ps; ++i) out.push_back({ring, FieldPower{i}});
    return out;
  }
  if (ring.beta().code != 0) {
    for (int i = 0; i <= 2 * ps; ++i) out.push_back({ring, ChainPrincipal{i}});
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::vector<QPoly> bs{ring.zero()};
  for (int u = 0; u < options.units_per_family; ++u) bs.push_back(random_field_unit(ring, rng));

  for (int k = 0; k <= ps; ++k) out.push_back({ring, Type1{k}});
  for (int k = 0; k <= ps - 1; ++k) {
    for (int j = ceil_half(ps + k); j <= ps - 1; ++j) {
      for (const auto& b : bs) out.push_back({ring, Type2{j, k, b}});
    }
  }
  for (int k = 0; k <= ps - 2; ++k) {
    for (int t = 1; t <= ps - k - 1; ++t) {
      for (int j = k + ceil_half(t); j <= k + t; ++j) {
        for (const auto& b : bs) out.push_back({ring, Type3{j, k, t, b}});
      }
    }
  }
  return out;
}

std::vector<MdsVerdict> mds_classify(const QuotientRing& ring, const ClassifyOptions& options) {
  std::vector<MdsVerdict> out;
  for (const CodeSpec& spec : enumerate_specs(ring, options)) {
    const ChainFormula f = dsp_formula_chain(spec);
    MdsVerdict v = singleton_defect(spec, f.value);
    v.branch = f.branch;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::pair<int, int>> table1_mds(int n, int p, int s) {
  const int ps = ipow(p, s);
  std::vector<std::pair<int, int>> rows;
  if (n == 1) {
    rows.emplace_back(1, 3);
    // at p^s = 3 the square is the top nonzero power, with distance p^s
    if (ps >= 4) rows.emplace_back(2, 4);
    if (p == 3 && s == 2) rows.emplace_back(4, 6);
    if (s == 1) {
      for (int k = 1; k <= p - 2; ++k) rows.emplace_back(k, k + 2);
    }
    rows.emplace_back(ps - 2, ps);
  } else if (n == 2) {
    rows.emplace_back(1, 4);
    if (s == 1) {
      for (int k = 1; k <= p - 2; ++k) rows.emplace_back(k, 2 * k + 2);
    }
    rows.emplace_back(ps - 1, 2 * ps);
  }
  std::erase_if(rows, [ps](const auto& r) { return r.first < 1 || r.first > ps - 1; });
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

std::vector<Table2Entry> table2_mds(int n, int p, int s) {
  const int ps = ipow(p, s);
  std::vector<Table2Entry> rows;
  if (n == 1) {
    rows.push_back({1, 0, 3});
    if (s >= 2) {
      for (int k : {0, 1}) rows.push_back({2, k, 4});
    }
    if (p == 3 && s == 2) {
      for (int k = 0; k <= 3; ++k) rows.push_back({4, k, 6});
    }
    if (s == 1) {
      for (int j = 1; j <= p - 2; ++j) {
        for (int k = std::max(0, 2 * j - p); k < j; ++k) rows.push_back({j, k, j + 2});
      }
    }
    for (int k : {ps - 4, ps - 3}) rows.push_back({ps - 2, k, ps});
  } else if (n == 2) {
    rows.push_back({1, 0, 4});
    if (s == 1) {
      for (int j = 1; j <= p - 2; ++j) {
        for (int k = std::max(0, 2 * j - p); k < j; ++k) rows.push_back({j, k, 2 * j + 2});
      }
    }
    rows.push_back({ps - 1, ps - 2, 2 * ps});
  }
  std::erase_if(rows, [ps](const Table2Entry& e) { return e.j < 1 || e.j > ps - 1 || e.k < 0 || e.k >= e.j; });
  std::sort(rows.begin(), rows.end(), [](const Table2Entry& a, const Table2Entry& b) {
    return std::tie(a.j, a.k, a.d_sp) < std::tie(b.j, b.k, b.d_sp);
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const Table2Entry& a, const Table2Entry& b) {
                           return a.j == b.j && a.k == b.k && a.d_sp == b.d_sp;
                         }),
             rows.end());
  return rows;
}

std::optional<TableShape> table_form_of(const CodeSpec& spec) {
  if (const auto* v = std::get_if<Type1>(&spec.variant)) return TableShape{v->k, std::nullopt};
  if (const auto* v = std::get_if<Type2>(&spec.variant)) {
    if (v->b.is_zero()) return std::nullopt;
    return TableShape{v->j, v->k};
  }
  if (const auto* v = std::get_if<Type3>(&spec.variant)) {
    if (v->b.is_zero() || v->t != 2 * v->j - 2 * v->k) return std::nullopt;
    return TableShape{v->j, v->k};
  }
  return std::nullopt;
}

ScanReport consistency_scan(const std::vector<CodeSpec>& specs, const OracleOptions& oracle) {
  ScanReport report;
  for (const CodeSpec& spec : specs) {
    ScanEntry e;
    e.key = spec_key(spec);
    e.formula_sp = dsp_formula_chain(spec).value;
    e.formula_H = dH_formula_spec(spec);
    e.closed_log_size = *closed_form_log_size(spec);
    if (!fits_budget(spec.ring.field().p(), e.closed_log_size, oracle.budget)) {
      e.status = "skipped";
      ++report.skipped;
      report.entries.push_back(std::move(e));
      continue;
    }
    const ConstacyclicCode code = build_code(spec);
    e.dim_p = code.dim_p();
    e.oracle = min_distance_brute(code, Metric::Pair, oracle);
    std::string detail;
    if (e.dim_p != e.closed_log_size) {
      detail += "dim_p " + std::to_string(e.dim_p) + " != " + std::to_string(e.closed_log_size) + "; ";
    }
    if (e.oracle->d_sp != e.formula_sp) {
      detail += "d_sp " + std::to_string(e.oracle->d_sp) + " != " + std::to_string(e.formula_sp) + "; ";
    }
    if (e.oracle->d_H != e.formula_H) {
      detail += "d_H " + std::to_string(e.oracle->d_H) + " != " + std::to_string(e.formula_H) + "; ";
    }
    if (detail.empty()) {
      e.status = "match";
    } else {
      e.status = "mismatch";
      if (e.oracle->witness) detail += "witness " + format_qpoly(*e.oracle->witness);
      e.detail = detail;
      ++report.mismatches;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

ScanReport consistency_scan(const QuotientRing& ring, const ScanOptions& options) {
  return consistency_scan(enumerate_specs(ring, options.classify), options.oracle);
}

}  // namespace sympair
