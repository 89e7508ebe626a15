#include "sympair/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sympair/theory.hpp"

namespace sympair::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  int p = 3;
  int m = 1;
  int s = 1;
  int n = 1;
  std::optional<std::string> alpha0;
  std::optional<std::string> beta;
  std::optional<std::string> modulus;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::optional<std::string> spec;
  std::string method = "both";
  std::string target = "mds";
  std::optional<std::string> out;
  int units = 3;
  unsigned threads = 0;
};

struct Report {
  std::vector<json> results;
  /// Column keys for csv / md rendering.
  std::vector<std::string> columns;
  int exit_code = kOk;
};

const std::vector<std::string> kTableColumns{"generator", "size", "pair distance", "remark"};

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["p"] = c.p;
  j["m"] = c.m;
  j["s"] = c.s;
  j["n"] = c.n;
  j["alpha0"] = c.alpha0 ? json(*c.alpha0) : json(nullptr);
  j["beta"] = c.beta ? json(*c.beta) : json(nullptr);
  j["modulus"] = c.modulus ? json(*c.modulus) : json(nullptr);
  j["budget"] = c.budget;
  j["format"] = c.format;
  j["seed"] = c.seed;
  if (c.command == "distance" || c.command == "build-code") j["spec"] = c.spec ? json(*c.spec) : json(nullptr);
  if (c.command == "distance") j["method"] = c.method;
  if (c.command == "scan") j["target"] = c.target;
  if (c.command == "scan") j["units"] = c.units;
  return j;
}

std::vector<int> parse_digit_list(std::string_view text) {
  std::vector<int> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad modulus coefficient '" + item + "'");
    }
  }
  return out;
}

Field make_field(const RunConfig& c) {
  std::optional<std::vector<int>> modulus;
  if (c.modulus) modulus = parse_digit_list(*c.modulus);
  return Field::build(c.p, c.m, modulus);
}

FieldElement resolve_alpha0(const RunConfig& c, const Field& F) {
  if (c.alpha0) return parse_element(F, *c.alpha0);
  const auto candidates = irreducible_binomial_constants(F, c.n);
  if (candidates.empty()) {
    throw Error(ErrorKind::ConstructionRefused,
                "no alpha0 makes x^" + std::to_string(c.n) + " - alpha0 irreducible over GF(" + std::to_string(F.q()) + ")");
  }
  return candidates.front();
}

QuotientRing make_ring(const RunConfig& c) {
  const Field F = make_field(c);
  const FieldElement a0 = resolve_alpha0(c, F);
  if (c.beta) return QuotientRing::chain_ring(F, c.n, c.s, a0, parse_element(F, *c.beta));
  return QuotientRing::field_ring(F, c.n, c.s, a0);
}

OracleOptions oracle_options(const RunConfig& c) {
  OracleOptions o;
  o.budget = c.budget;
  o.seed = c.seed;
  o.threads = c.threads;
  return o;
}

ClassifyOptions classify_options(const RunConfig& c) {
  ClassifyOptions o;
  o.seed = c.seed;
  o.units_per_family = c.units;
  return o;
}

std::string element_text(const Field& F, FieldElement a) {
  const std::string digits = format_element(F, a);
  return F.m() == 1 ? digits : "(" + digits + ")";
}

// (x^n - alpha0)^e as text.
std::string power_text(const QuotientRing& R, int e) {
  if (e == 0) return "1";
  std::string h = "x";
  if (R.n() > 1) h += "^" + std::to_string(R.n());
  h += "-" + element_text(R.field(), R.alpha0());
  if (e == 1) return h;
  return "(" + h + ")^" + std::to_string(e);
}

// factor for a product: wraps a bare binomial in parentheses
std::string factor_text(const QuotientRing& R, int e) {
  const std::string t = power_text(R, e);
  return e == 1 ? "(" + t + ")" : t;
}

std::string poly_text(const QPoly& b) {
  const std::string key = spec_key(CodeSpec{b.ring(), Type2{0, 0, b}});
  return key.substr(key.find("b=") + 2);
}

std::string generator_text(const CodeSpec& spec) {
  const QuotientRing& R = spec.ring;
  return std::visit(
      [&](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FieldPower> || std::is_same_v<V, ChainPrincipal>) {
          return power_text(R, v.i);
        } else if constexpr (std::is_same_v<V, Type1>) {
          return power_text(R, v.k);
        } else if constexpr (std::is_same_v<V, Type2>) {
          const std::string u = v.k == 0 ? "u" : "u*" + factor_text(R, v.k);
          return v.b.is_zero() ? u : factor_text(R, v.j) + "*(" + poly_text(v.b) + ")+" + u;
        } else if constexpr (std::is_same_v<V, Type3>) {
          const std::string u = v.k == 0 ? "u" : "u*" + factor_text(R, v.k);
          const std::string first = v.b.is_zero() ? u : factor_text(R, v.j) + "*(" + poly_text(v.b) + ")+" + u;
          return "<" + first + ", " + power_text(R, v.k + v.t) + ">";
        } else {
          return v.label;
        }
      },
      spec.variant);
}

std::string size_text(int p, long long log_size) { return std::to_string(p) + "^" + std::to_string(log_size); }

json branch_json(const BranchWitness& b) {
  json j;
  j["branch"] = b.branch;
  j["k"] = b.k >= 0 ? json(b.k) : json(nullptr);
  j["theta"] = b.theta >= 0 ? json(b.theta) : json(nullptr);
  j["gamma"] = b.gamma >= 0 ? json(b.gamma) : json(nullptr);
  j["value"] = b.value;
  return j;
}

json verdict_json(const MdsVerdict& v, const CodeSpec& spec) {
  const int p = spec.ring.field().p();
  json j;
  j["key"] = v.key;
  j["generator"] = generator_text(spec);
  j["size"] = size_text(p, v.log_size);
  j["pair distance"] = v.d_sp;
  j["log_size"] = v.log_size;
  j["bound_log"] = v.bound_log;
  j["singleton_defect"] = v.singleton_defect;
  j["is_mds"] = v.is_mds;
  j["trivial"] = v.trivial;
  j["remark"] = v.trivial ? "trivial" : "nontrivial";
  j["branch"] = branch_json(v.branch);
  return j;
}

// ---- commands ----

Report cmd_field_info(const RunConfig& c) {
  const Field F = make_field(c);
  json r;
  r["p"] = F.p();
  r["m"] = F.m();
  r["q"] = F.q();
  r["modulus"] = F.modulus();
  json prim = json::array();
  for (auto a : primitive_elements(F)) prim.push_back(format_element(F, a));
  r["primitive_elements"] = prim;
  r["n"] = c.n;
  json lambdas = json::array();
  for (auto a : irreducible_binomial_constants(F, c.n)) lambdas.push_back(format_element(F, a));
  r["irreducible_binomial_constants"] = lambdas;
  return {{r}, {"p", "m", "q", "modulus", "primitive_elements", "n", "irreducible_binomial_constants"}};
}

Report cmd_check_binomial(const RunConfig& c) {
  const Field F = make_field(c);
  if (!c.alpha0) throw Error(ErrorKind::ConstraintViolation, "check-binomial needs --alpha0");
  const FieldElement lambda = parse_element(F, *c.alpha0);
  json r;
  r["n"] = c.n;
  r["lambda"] = format_element(F, lambda);
  r["order"] = F.order(lambda);
  r["irreducible"] = binomial_irreducible(F, c.n, lambda);
  return {{r}, {"n", "lambda", "order", "irreducible"}};
}

CodeSpec require_spec(const RunConfig& c, const QuotientRing& R) {
  if (!c.spec) throw Error(ErrorKind::ConstraintViolation, c.command + " needs --spec");
  CodeSpec spec = parse_code_spec(R, *c.spec);
  validate(spec);
  return spec;
}

Report cmd_build_code(const RunConfig& c) {
  const QuotientRing R = make_ring(c);
  const CodeSpec spec = require_spec(c, R);
  const ConstacyclicCode code = build_code(spec);
  const long long closed = *closed_form_log_size(spec);
  json r;
  r["key"] = spec_key(spec);
  r["generator"] = generator_text(spec);
  r["length"] = R.length();
  r["dim_p"] = code.dim_p();
  r["closed_form_log_size"] = closed;
  r["size"] = size_text(R.field().p(), code.dim_p());
  r["match"] = closed == code.dim_p();
  json gens = json::array();
  for (const auto& g : code.generators()) gens.push_back(format_qpoly(g));
  r["generators"] = gens;
  Report rep{{r}, {"key", "generator", "length", "dim_p", "closed_form_log_size", "size", "match"}};
  if (closed != code.dim_p()) rep.exit_code = kVerificationMismatch;
  return rep;
}

Report cmd_distance(const RunConfig& c) {
  if (c.method != "formula" && c.method != "brute" && c.method != "both") {
    throw Error(ErrorKind::ConstraintViolation, "--method must be formula, brute or both");
  }
  const QuotientRing R = make_ring(c);
  const CodeSpec spec = require_spec(c, R);
  json r;
  r["key"] = spec_key(spec);
  r["generator"] = generator_text(spec);
  Report rep;
  rep.columns = {"key", "generator"};
  std::optional<ChainFormula> formula;
  if (c.method != "brute") {
    formula = dsp_formula_chain(spec);
    json f;
    f["d_sp"] = formula->value;
    f["d_H"] = dH_formula_spec(spec);
    f["method"] = to_string(DistanceMethod::ClosedForm);
    f["branch"] = branch_json(formula->branch);
    f["field_exponent"] = formula->field_exponent ? json(*formula->field_exponent) : json(nullptr);
    r["formula"] = f;
    r["d_sp"] = formula->value;
    rep.columns.push_back("d_sp");
  }
  if (c.method != "formula") {
    const ConstacyclicCode code = build_code(spec);
    const DistanceReport oracle = min_distance_brute(code, Metric::Pair, oracle_options(c));
    r["oracle"] = to_json(oracle);
    r["exact"] = oracle.method == DistanceMethod::Exhaustive;
    if (!formula) {
      r["d_sp"] = oracle.d_sp;
      rep.columns.push_back("d_sp");
    }
    rep.columns.push_back("exact");
    const bool exact = oracle.method == DistanceMethod::Exhaustive;
    if (!exact) {
      r["warning"] = "budget exceeded: oracle value is an upper bound";
      // only brute alone needs the oracle to be exact
      if (!formula) rep.exit_code = kBudgetExceeded;
    }
    if (formula) {
      // an upper bound can still refute the formula when it falls below it
      const bool refuted = exact ? oracle.d_sp != formula->value || oracle.d_H != dH_formula_spec(spec)
                                 : oracle.d_sp < formula->value;
      r["match"] = exact ? json(!refuted) : (refuted ? json(false) : json(nullptr));
      rep.columns.push_back("match");
      if (refuted) rep.exit_code = kVerificationMismatch;
    }
  }
  rep.results.push_back(r);
  return rep;
}

Report cmd_scan(const RunConfig& c) {
  const QuotientRing R = make_ring(c);
  Report rep;
  if (c.target == "mds") {
    const auto specs = enumerate_specs(R, classify_options(c));
    for (const CodeSpec& spec : specs) {
      const ChainFormula f = dsp_formula_chain(spec);
      MdsVerdict v = singleton_defect(spec, f.value);
      v.branch = f.branch;
      if (v.is_mds) rep.results.push_back(verdict_json(v, spec));
    }
    rep.columns = kTableColumns;
    return rep;
  }
  if (c.target != "consistency") throw Error(ErrorKind::ConstraintViolation, "--target must be mds or consistency");
  ScanOptions opts;
  opts.classify = classify_options(c);
  opts.oracle = oracle_options(c);
  const ScanReport report = consistency_scan(R, opts);
  for (const ScanEntry& e : report.entries) {
    json j;
    j["key"] = e.key;
    j["status"] = e.status;
    j["formula_d_sp"] = e.formula_sp;
    j["formula_d_H"] = e.formula_H;
    j["closed_form_log_size"] = e.closed_log_size;
    j["dim_p"] = e.dim_p >= 0 ? json(e.dim_p) : json(nullptr);
    j["oracle"] = e.oracle ? to_json(*e.oracle) : json(nullptr);
    j["detail"] = e.detail;
    rep.results.push_back(j);
  }
  rep.columns = {"key", "status", "formula_d_sp", "formula_d_H", "closed_form_log_size", "dim_p", "detail"};
  if (report.mismatches > 0) rep.exit_code = kVerificationMismatch;
  return rep;
}

// One row per table entry at the configured parameters, each checked by the
// closed form and, where the code fits the budget, by the oracle.
Report cmd_tables(const RunConfig& c) {
  const QuotientRing R = make_ring(c);
  Report rep;
  rep.columns = kTableColumns;
  const int p = R.field().p();
  std::mt19937_64 rng(c.seed);
  auto check_row = [&](const CodeSpec& spec, int listed_d, json& row) {
    const ChainFormula f = dsp_formula_chain(spec);
    const MdsVerdict v = singleton_defect(spec, f.value);
    row["key"] = spec_key(spec);
    row["formula_d_sp"] = f.value;
    row["is_mds"] = v.is_mds;
    bool ok = v.is_mds && f.value == listed_d;
    const long long log_size = v.log_size;
    if (static_cast<double>(log_size) * std::log(static_cast<double>(p)) <= std::log(static_cast<double>(c.budget))) {
      const DistanceReport o = min_distance_brute(build_code(spec), Metric::Pair, oracle_options(c));
      row["oracle_d_sp"] = o.d_sp;
      ok = ok && o.d_sp == listed_d;
    } else {
      row["oracle_d_sp"] = nullptr;
    }
    row["verified"] = ok;
    if (!ok) rep.exit_code = kVerificationMismatch;
  };

  if (!R.is_chain()) {
    for (auto [i, d] : table1_mds(R.n(), p, R.s())) {
      const CodeSpec spec{R, FieldPower{i}};
      json row;
      row["generator"] = power_text(R, i);
      row["size"] = size_text(p, *closed_form_log_size(spec));
      row["pair distance"] = d;
      row["remark"] = "i=" + std::to_string(i);
      check_row(spec, d, row);
      rep.results.push_back(row);
    }
    return rep;
  }
  if (R.beta().code != 0) return rep;  // only the full space meets the bound

  const QPoly unit = random_field_unit(R, rng);
  for (const Table2Entry& e : table2_mds(R.n(), p, R.s())) {
    json row;
    row["generator"] = power_text(R, e.j) + "+u*" + (e.k == 0 ? std::string("b") : factor_text(R, e.k) + "*b");
    row["pair distance"] = e.d_sp;
    row["remark"] = "j=" + std::to_string(e.j) + ",k=" + std::to_string(e.k);
    json checks = json::array();
    std::optional<long long> size;
    bool all_ok = true;
    for (const QPoly& b : {R.zero(), unit}) {
      const CodeSpec spec = table_form_spec(R, e.j, e.k, b);
      json check;
      check["b"] = b.is_zero() ? "0" : poly_text(b);
      const int before = rep.exit_code;
      check_row(spec, e.d_sp, check);
      all_ok = all_ok && check["verified"].get<bool>();
      rep.exit_code = before == kOk ? rep.exit_code : before;
      if (!b.is_zero()) size = *closed_form_log_size(spec);
      checks.push_back(check);
    }
    row["size"] = size_text(p, *size);
    row["checks"] = checks;
    row["verified"] = all_ok;
    rep.results.push_back(row);
  }
  return rep;
}

// ---- rendering ----

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render(const RunConfig& c, const Report& rep) {
  std::ostringstream os;
  if (c.format == "json") {
    json top;
    top["config"] = config_json(c);
    top["results"] = rep.results;
    top["version"] = kVersion;
    os << top.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (std::size_t k = 0; k < rep.columns.size(); ++k) os << (k ? "," : "") << csv_escape(rep.columns[k]);
    os << "\n";
    for (const auto& r : rep.results) {
      for (std::size_t k = 0; k < rep.columns.size(); ++k) {
        os << (k ? "," : "") << csv_escape(r.contains(rep.columns[k]) ? cell(r[rep.columns[k]]) : "");
      }
      os << "\n";
    }
  } else {
    os << "|";
    for (const auto& col : rep.columns) os << " " << col << " |";
    os << "\n|";
    for (std::size_t k = 0; k < rep.columns.size(); ++k) os << " --- |";
    os << "\n";
    for (const auto& r : rep.results) {
      os << "|";
      for (const auto& col : rep.columns) os << " " << (r.contains(col) ? cell(r[col]) : "") << " |";
      os << "\n";
    }
  }
  return os.str();
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--p", c.p, "characteristic")->capture_default_str();
  sub->add_option("--m", c.m, "extension degree")->capture_default_str();
  sub->add_option("--s", c.s, "exponent of p in the length")->capture_default_str();
  sub->add_option("--n", c.n, "length factor coprime to p")->capture_default_str();
  sub->add_option("--alpha0", c.alpha0, "alpha0 as digits, constant first (default: first valid)");
  sub->add_option("--beta", c.beta, "beta; selects the chain-ring alphabet");
  sub->add_option("--modulus", c.modulus, "field modulus coefficients, constant first");
  sub->add_option("--budget", c.budget, "largest code the oracle enumerates")->capture_default_str();
  sub->add_option("--format", c.format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for sampled units")->capture_default_str();
  sub->add_option("--out", c.out, "write the report to this file");
  sub->add_option("--threads", c.threads, "oracle threads, 0 = hardware")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  RunConfig c;
  CLI::App app{"Symbol-pair distances of repeated-root constacyclic codes"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    Report (*fn)(const RunConfig&);
  };
  const std::vector<Sub> subs{
      {"field-info", "field modulus, primitive elements and irreducible binomial constants", cmd_field_info},
      {"check-binomial", "irreducibility of x^n - alpha0", cmd_check_binomial},
      {"build-code", "build a code and compare its size with the closed form", cmd_build_code},
      {"distance", "pair distance by formula, oracle or both", cmd_distance},
      {"scan", "MDS classification or formula/oracle consistency over a ring", cmd_scan},
      {"tables", "MDS table rows at the given parameters, verified", cmd_tables},
  };
  std::vector<CLI::App*> handles;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, c);
    if (std::string_view(s.name) == "distance" || std::string_view(s.name) == "build-code") {
      sub->add_option("--spec", c.spec, "code spec, e.g. field-power:i=2 or type2:j=7,k=1,b=1");
    }
    if (std::string_view(s.name) == "distance") {
      sub->add_option("--method", c.method, "formula, brute or both")
          ->check(CLI::IsMember({"formula", "brute", "both"}))
          ->capture_default_str();
    }
    if (std::string_view(s.name) == "scan") {
      sub->add_option("--target", c.target, "mds or consistency")
          ->check(CLI::IsMember({"mds", "consistency"}))
          ->capture_default_str();
      sub->add_option("--units", c.units, "random units sampled per family for b")->capture_default_str();
    }
    handles.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream msg;
      app.exit(e, msg, msg);
      out << msg.str();
      return kOk;
    }
    json err;
    err["error"] = "UsageError";
    err["message"] = e.what();
    out << err.dump() << "\n";
    return kConstraintViolation;
  }

  Report rep;
  try {
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (handles[k]->parsed()) {
        c.command = subs[k].name;
        rep = subs[k].fn(c);
      }
    }
  } catch (const Error& e) {
    json err;
    err["error"] = std::string(to_string(e.kind()));
    err["message"] = e.what();
    err["config"] = config_json(c);
    out << err.dump() << "\n";
    return kConstraintViolation;
  }

  const std::string text = render(c, rep);
  if (c.out) {
    std::ofstream file(*c.out);
    if (!file) {
      json err;
      err["error"] = "IoError";
      err["message"] = "cannot open " + *c.out;
      out << err.dump() << "\n";
      return kConstraintViolation;
    }
    file << text;
  } else {
    out << text;
  }
  return rep.exit_code;
}

}  // namespace sympair::cli
