// lam2: batch front-end over the sieve library.
//
// Subcommands: weights, bound, balance, quintic-scan, squarefree, euler,
// predict.  Every subcommand emits machine-readable CSV or JSON, writes to
// stdout or --out, and is byte-deterministic for a given configuration
// (including across --threads values).  Exit codes: 0 success, 2 usage or
// domain error, 3 enumeration budget exceeded.
//
// Rationals are serialized as "num/den" strings in JSON and as separate
// numerator/denominator columns in CSV; floating point appears only for
// genuinely irrational quantities (interval endpoints, model remainders).

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambda2/balance.hpp"
#include "lambda2/density.hpp"
#include "lambda2/errors.hpp"
#include "lambda2/instances.hpp"
#include "lambda2/maximal.hpp"
#include "lambda2/primes.hpp"
#include "lambda2/quintic.hpp"
#include "lambda2/rational.hpp"
#include "lambda2/sieve.hpp"

using json = nlohmann::ordered_json;
using namespace lambda2;

namespace {

// ───────────────────── rendering helpers ─────────────────────

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw domain_error("cannot open output file: " + out_path);
  f << text;
}

// ───────────────────── flag parsing helpers ─────────────────────

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& s) {
  Rat q = parse_rat(s);
  if (!is_integer(q)) throw domain_error("expected an integer: " + s);
  if (!q.get_num().fits_slong_p())
    throw domain_error("integer out of range: " + s);
  return q.get_num().get_si();
}

// "const:1/5", "inverse-p", or "table:2=1/2,3=1/3[,default=1/7]".
DensityFunction parse_density(const std::string& spec) {
  if (spec == "inverse-p") return DensityFunction::inverse_prime();
  if (spec.rfind("const:", 0) == 0)
    return DensityFunction::constant(parse_rat(spec.substr(6)));
  if (spec.rfind("table:", 0) == 0) {
    std::map<std::int64_t, Rat> table;
    Rat dflt(0);
    for (const std::string& entry : split(spec.substr(6), ',')) {
      std::size_t eq = entry.find('=');
      if (eq == std::string::npos)
        throw domain_error("table entry without '=': " + entry);
      std::string key = entry.substr(0, eq);
      Rat val = parse_rat(entry.substr(eq + 1));
      if (key == "default")
        dflt = val;
      else
        table[parse_int(key)] = val;
    }
    return DensityFunction::from_table(std::move(table), dflt);
  }
  throw domain_error("unknown density spec: " + spec +
                     " (use const:RAT, inverse-p, or table:p=RAT,...)");
}

// "lo:hi" (same interval for all five coefficients) or five comma-separated
// intervals for c4,c3,c2,c1,c0; a bare value is a one-point interval.
CoeffBox parse_box(const std::string& spec) {
  auto interval = [](const std::string& s) -> std::pair<long long, long long> {
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) {
      long long v = parse_int(s);
      return {v, v};
    }
    return {parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1))};
  };
  std::vector<std::string> parts = split(spec, ',');
  if (parts.size() == 1) {
    auto [lo, hi] = interval(parts[0]);
    return CoeffBox::cube(lo, hi);
  }
  if (parts.size() != 5)
    throw domain_error("box needs one interval or five (c4..c0): " + spec);
  CoeffBox box;
  for (std::size_t i = 0; i < 5; ++i) box.range[i] = interval(parts[i]);
  return box;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const std::string& part : split(s, ','))
    if (!part.empty()) out.push_back(parse_int(part));
  return out;
}

// ───────────────────── config-file merging ─────────────────────

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// The flat key=value config files documented on --config are merged by hand:
// each key becomes "--key value" appended after the real flags, and keys
// already present on the command line are skipped, so flags take precedence.
// (Config support in the argument parser only fires on the root command, not
// on subcommands, which is where all of our options live.)
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      path = args[i].substr(9);
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw domain_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw domain_error("config line is not key=value: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (val.size() >= 2 && ((val.front() == '"' && val.back() == '"') ||
                            (val.front() == '\'' && val.back() == '\'')))
      val = val.substr(1, val.size() - 2);
    if (key.empty()) throw domain_error("config line has an empty key: " + line);
    if (key == "config")
      throw domain_error("config files cannot set --config");
    const std::string flag = "--" + key;
    bool given = false;
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) {
        given = true;
        break;
      }
    if (!given) {
      args.push_back(flag);
      args.push_back(val);
    }
  }
  return args;
}

// ───────────────────── shared options ─────────────────────

struct CommonOpts {
  std::string format = "csv";
  std::string out;
  std::string config;
  int threads = 1;
  std::uint64_t budget = 1'000'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
  cmd->add_option("--threads", o.threads, "Worker count for enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--budget", o.budget, "Enumeration budget (work cap)")
      ->capture_default_str();
  cmd->add_option("--config", o.config,
                  "Flat key=value config file; flags take precedence");
}

// ───────────────────── weights ─────────────────────

std::string run_weights(const std::string& g_spec, std::int64_t z,
                        const std::string& level, const CommonOpts& o) {
  DensityFunction g = parse_density(g_spec);
  PlanOptions popts;
  popts.support_cap = o.budget;
  SievePlan plan = SievePlan::build(g, z, parse_rat(level), popts);
  SieveWeights w = selberg_weights(g, plan);
  if (o.format == "csv") return weights_csv(w);
  json out;
  out["H"] = rat_str(w.H);
  out["rows"] = json::array();
  for (std::size_t i = 0; i < w.d.size(); ++i)
    out["rows"].push_back({{"d", w.d[i]}, {"lambda", rat_str(w.lambda[i])}});
  return out.dump(2) + "\n";
}

// ───────────────────── bound ─────────────────────

// Delegates everything to a base instance but reports a caller-chosen
// remainder model (the CLI's --model-* overrides).
class ModelOverrideInstance : public SiftedInstance {
 public:
  ModelOverrideInstance(const SiftedInstance& base, RemainderModel m)
      : base_(base), model_(std::move(m)) {}
  Rat size() const override { return base_.size(); }
  const DensityFunction& density() const override { return base_.density(); }
  Int count_in_classes(std::int64_t d) const override {
    return base_.count_in_classes(d);
  }
  Int sifted_count_exact(std::int64_t z, std::uint64_t cap) const override {
    return base_.sifted_count_exact(z, cap);
  }
  std::optional<RemainderModel> remainder_model() const override {
    return model_;
  }

 private:
  const SiftedInstance& base_;
  RemainderModel model_;
};

struct BoundFlags {
  std::string instance = "residue";
  std::int64_t n = 100000;
  std::string omega = "0";
  std::string box = "-3:3";
  std::string family = "five";
  std::int64_t z = 31;
  std::string level = "10000";
  std::string mode = "exact";
  std::string model_c, model_bigc, model_kappa, model_theta;
};

std::string run_bound(const BoundFlags& f, const CommonOpts& o) {
  std::unique_ptr<SiftedInstance> owned;
  if (f.instance == "residue") {
    owned = std::make_unique<ResidueAvoidanceInstance>(
        f.n, ResidueAvoidanceInstance::fixed_residue_rule(parse_int_list(f.omega)),
        o.budget);
  } else if (f.instance == "quintic") {
    Family fam;
    if (f.family == "five")
      fam = Family::five;
    else if (f.family == "1112")
      fam = Family::type1112;
    else
      throw domain_error("unknown family: " + f.family);
    owned = std::make_unique<QuinticBoxInstance>(parse_box(f.box), fam, f.z,
                                                 o.budget, o.threads);
  } else {
    throw domain_error("unknown instance kind: " + f.instance);
  }
  const SiftedInstance* inst = owned.get();

  std::unique_ptr<ModelOverrideInstance> wrapped;
  const bool overrides = !f.model_c.empty() || !f.model_bigc.empty() ||
                         !f.model_kappa.empty() || !f.model_theta.empty();
  if (overrides) {
    SiftedInstance::RemainderModel m =
        inst->remainder_model().value_or(SiftedInstance::RemainderModel{});
    if (!f.model_c.empty()) m.c = parse_rat(f.model_c);
    if (!f.model_bigc.empty()) m.C = parse_rat(f.model_bigc);
    if (!f.model_kappa.empty()) m.kappa = parse_rat(f.model_kappa);
    if (!f.model_theta.empty()) m.theta = parse_rat(f.model_theta);
    wrapped = std::make_unique<ModelOverrideInstance>(*inst, std::move(m));
    inst = wrapped.get();
  }

  PlanOptions popts;
  popts.support_cap = o.budget;
  SievePlan plan =
      SievePlan::build(inst->density(), f.z, parse_rat(f.level), popts);
  SieveMode mode;
  if (f.mode == "exact")
    mode = SieveMode::exact;
  else if (f.mode == "model")
    mode = SieveMode::model;
  else
    throw domain_error("unknown mode: " + f.mode);

  BoundOptions bopts;
  bopts.threads = o.threads;
  bopts.model_term_cap = o.budget;
  SieveReport rep = sieve_upper_bound(*inst, plan, mode, bopts);

  std::optional<Int> oracle;
  if (mode == SieveMode::exact) oracle = inst->sifted_count_exact(f.z, o.budget);

  if (o.format == "json") {
    json out;
    out["mode"] = f.mode;
    out["support_size"] = rep.support_size;
    out["H"] = rat_str(rep.H);
    out["main"] = rat_str(rep.main_bound);
    out["remainder"] = rep.remainder_bound;
    out["total"] = rep.total_bound;
    if (mode == SieveMode::model)
      out["level_exponent"] = rat_str(rep.level_exponent);
    if (oracle) {
      out["oracle"] = oracle->get_str();
      if (*oracle > 0)
        out["ratio"] = rep.total_bound / oracle->get_d();
    }
    return out.dump(2) + "\n";
  }
  std::string csv =
      "mode,support_size,H,main,remainder,total,level_exponent,oracle,ratio\n";
  csv += f.mode + "," + std::to_string(rep.support_size) + "," +
         rat_str(rep.H) + "," + rat_str(rep.main_bound) + "," +
         fmt_double(rep.remainder_bound) + "," + fmt_double(rep.total_bound) +
         ",";
  csv += (mode == SieveMode::model) ? rat_str(rep.level_exponent) : "";
  csv += ",";
  if (oracle) {
    csv += oracle->get_str();
    csv += ",";
    if (*oracle > 0) csv += fmt_double(rep.total_bound / oracle->get_d());
  } else {
    csv += ",";
  }
  csv += "\n";
  return csv;
}

// ───────────────────── balance ─────────────────────

std::string run_balance(const std::string& terms_flag, std::string param,
                        const std::string& tmin, const std::string& tmax,
                        const CommonOpts& o) {
  BalanceProblem prob;
  for (const std::string& part : split(terms_flag, ','))
    prob.terms.push_back(parse_power_term(part));
  if (param.empty()) {
    // auto-detect: the unique non-X name appearing in the terms
    std::map<std::string, int> names;
    for (const PowerTerm& t : prob.terms)
      for (const auto& [name, e] : t.exponents)
        if (name != "X" && e != 0) names[name] = 1;
    if (names.size() > 1)
      throw domain_error("ambiguous balance parameter; pass --param");
    param = names.empty() ? "D" : names.begin()->first;
  }
  prob.parameter = param;
  prob.theta_min = parse_rat(tmin);
  if (!tmax.empty()) prob.theta_max = parse_rat(tmax);
  BalanceResult res = balance(prob);

  if (o.format == "json") {
    json out;
    if (res.unbounded) {
      out["unbounded"] = true;
    } else {
      out["theta"] = rat_str(res.theta);
      out["exponent"] = rat_str(res.exponent);
      out["active_terms"] = json::array();
      for (std::size_t i : res.active)
        out["active_terms"].push_back(power_term_str(prob.terms[i]));
    }
    return out.dump(2) + "\n";
  }
  std::string csv = "unbounded,theta,exponent,active\n";
  if (res.unbounded) {
    csv += "1,,,\n";
    return csv;
  }
  csv += "0," + rat_str(res.theta) + "," + rat_str(res.exponent) + ",";
  for (std::size_t k = 0; k < res.active.size(); ++k) {
    if (k) csv += ';';
    csv += power_term_str(prob.terms[res.active[k]]);
  }
  csv += "\n";
  return csv;
}

// ───────────────────── quintic-scan ─────────────────────

struct ScanFlags {
  std::string box = "-3:3";
  std::int64_t max_prime = 31;
  std::int64_t z = 0;  // 0 = max_prime + 1
  std::string level = "1000";
};

std::string run_quintic_scan(const ScanFlags& f, const CommonOpts& o) {
  CoeffBox box = parse_box(f.box);
  std::vector<std::int64_t> cols;
  for (std::int64_t p : primes_below(f.max_prime + 1)) cols.push_back(p);
  const std::int64_t z = (f.z > 0) ? f.z : f.max_prime + 1;

  const std::uint64_t card = box.cardinality();
  if (card * std::max<std::size_t>(cols.size(), 1) > o.budget)
    throw budget_error("box scan exceeds budget");

  // single enumeration pass: rows, degenerate count, disjointness check
  std::uint64_t degenerate = 0, violations = 0;
  struct Row {
    QuinticPoly f;
    std::string disc;
    bool degen;
    std::vector<std::string> types;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(card));
  for (std::uint64_t idx = 0; idx < card; ++idx) {
    Row r;
    r.f = box.at(idx);
    r.disc = discriminant(r.f).get_str();
    r.degen = is_degenerate(r.f);
    bool has5 = false, has1112 = false;
    for (std::int64_t p : cols) {
      FactorizationType t = factorization_type(r.f, p);
      r.types.push_back(t.str());
      if (!t.ramified) {
        has5 |= t.degrees == std::vector<int>{5};
        has1112 |= t.degrees == std::vector<int>{1, 1, 1, 2};
      }
    }
    degenerate += r.degen;
    violations += (r.degen && has5 && has1112);
    rows.push_back(std::move(r));
  }

  // the two family bounds over the same box
  auto family_bound = [&](Family fam) {
    QuinticBoxInstance inst(box, fam, z, o.budget, o.threads);
    PlanOptions popts;
    popts.support_cap = o.budget;
    SievePlan plan =
        SievePlan::build(inst.density(), z, parse_rat(f.level), popts);
    BoundOptions bopts;
    bopts.threads = o.threads;
    return sieve_upper_bound(inst, plan, SieveMode::exact, bopts).main_bound;
  };
  Rat bound_five = family_bound(Family::five);
  Rat bound_1112 = family_bound(Family::type1112);

  if (o.format == "json") {
    json out;
    out["rows"] = json::array();
    for (const Row& r : rows) {
      json jr;
      jr["c4"] = r.f.c4();
      jr["c3"] = r.f.c3();
      jr["c2"] = r.f.c2();
      jr["c1"] = r.f.c1();
      jr["c0"] = r.f.c0();
      jr["disc"] = r.disc;
      jr["degenerate"] = r.degen ? 1 : 0;
      for (std::size_t i = 0; i < cols.size(); ++i)
        jr["p" + std::to_string(cols[i])] = r.types[i];
      out["rows"].push_back(std::move(jr));
    }
    out["summary"] = {{"degenerate", degenerate},
                      {"bound_five", rat_str(bound_five)},
                      {"bound_1112", rat_str(bound_1112)},
                      {"violations", violations}};
    return out.dump(2) + "\n";
  }

  std::string csv = "c4,c3,c2,c1,c0,disc,degenerate";
  for (std::int64_t p : cols) csv += ",p" + std::to_string(p);
  csv += "\n";
  for (const Row& r : rows) {
    for (long long ci : r.f.c) {
      csv += std::to_string(ci);
      csv += ',';
    }
    csv += r.disc;
    csv += ',';
    csv += r.degen ? '1' : '0';
    for (const std::string& t : r.types) {
      csv += ',';
      csv += t;
    }
    csv += '\n';
  }
  csv += "#degenerate=" + std::to_string(degenerate) + "\n";
  csv += "#bound_five=" + rat_str(bound_five) + "\n";
  csv += "#bound_1112=" + rat_str(bound_1112) + "\n";
  csv += "#violations=" + std::to_string(violations) + "\n";
  return csv;
}

// ───────────────────── squarefree ─────────────────────

std::string run_squarefree(const std::string& xs, const std::string& ts,
                           const CommonOpts& o) {
  SquarefreeFamily fam;
  json jrows = json::array();
  std::string csv = "x,t,estimate,exact,tail_num,tail_den\n";
  for (std::int64_t x : parse_int_list(xs)) {
    if (x < 1) throw domain_error("x must be >= 1");
    Int X = int_of(x);
    // exact value: full truncation T0 > sqrt(X) makes the estimate exact
    std::int64_t t0 = 2;
    while (t0 * t0 <= x) ++t0;
    Int exact = rat_floor(truncated_ie(fam, X, t0).estimate);
    for (std::int64_t t : parse_int_list(ts)) {
      IEResult r = truncated_ie(fam, X, t);
      if (o.format == "json") {
        jrows.push_back({{"x", x},
                         {"t", t},
                         {"estimate", rat_str(r.estimate)},
                         {"exact", exact.get_str()},
                         {"tail_bound", rat_str(r.tail_bound)}});
      } else {
        csv += std::to_string(x) + "," + std::to_string(t) + "," +
               rat_str(r.estimate) + "," + exact.get_str() + "," +
               r.tail_bound.get_num().get_str() + "," +
               r.tail_bound.get_den().get_str() + "\n";
      }
    }
  }
  if (o.format == "json") return jrows.dump(2) + "\n";
  return csv;
}

// ───────────────────── euler / predict ─────────────────────

std::string run_euler(const std::string& local, std::int64_t P,
                      const CommonOpts& o) {
  Interval v;
  if (local == "one") {
    EulerProductSpec spec;
    spec.local = [](std::int64_t) { return Rat(1); };
    spec.kappa = 0.0;
    spec.s = 2.0;
    v = euler_product(spec, P);
  } else if (local == "zeta2-reciprocal") {
    EulerProductSpec spec;
    spec.local = [](std::int64_t p) {
      return Rat(1 - make_rat(1, static_cast<long long>(p) * p));
    };
    spec.kappa = 2.0;  // |log(1 - p^-2)| <= 2 p^-2 for p >= 2
    spec.s = 2.0;
    v = euler_product(spec, P);
  } else if (local == "headline") {
    v = headline_constant(P);
  } else {
    throw domain_error("unknown local factor: " + local +
                       " (use one, zeta2-reciprocal, headline)");
  }
  if (o.format == "json") {
    json out;
    out["local"] = local;
    out["value_lo"] = v.lo;
    out["value_hi"] = v.hi;
    out["truncation_P"] = P;
    return out.dump(2) + "\n";
  }
  return "local,p,value_lo,value_hi\n" + local + "," + std::to_string(P) +
         "," + fmt_double(v.lo) + "," + fmt_double(v.hi) + "\n";
}

std::string run_predict(int i, const std::string& x, std::int64_t P,
                        const CommonOpts& o) {
  Prediction pred = headline_prediction(i, parse_rat(x), P);
  if (o.format == "json") {
    json out;
    out["i"] = i;
    out["d_i"] = rat_str(pred.d_i);
    out["value_lo"] = pred.value.lo;
    out["value_hi"] = pred.value.hi;
    out["truncation_P"] = pred.truncation_P;
    return out.dump(2) + "\n";
  }
  return "i,d_num,d_den,value_lo,value_hi,p\n" + std::to_string(i) + "," +
         pred.d_i.get_num().get_str() + "," + pred.d_i.get_den().get_str() +
         "," + fmt_double(pred.value.lo) + "," + fmt_double(pred.value.hi) +
         "," + std::to_string(pred.truncation_P) + "\n";
}

}  // namespace

// ───────────────────── entry point ─────────────────────

int main(int argc, char** argv) {
  CLI::App app{"Selberg-sieve toolkit: exact weights, bounds, exponent "
               "balancing, quintic scans, truncated inclusion-exclusion",
               "lam2"};
  app.require_subcommand(1);

  std::function<std::string()> run;

  // weights
  CommonOpts wo;
  std::string w_g;
  std::int64_t w_z = 0;
  std::string w_level;
  {
    CLI::App* c = app.add_subcommand("weights", "Optimal sieve weight table");
    c->add_option("--g", w_g, "Density: const:RAT, inverse-p, table:p=RAT,...")
        ->required();
    c->add_option("--z", w_z, "Sifting limit (primes p < z)")->required();
    c->add_option("--level", w_level, "Level D (support d^2 < D)")->required();
    add_common(c, wo);
    c->callback([&] { run = [&] { return run_weights(w_g, w_z, w_level, wo); }; });
  }

  // bound
  CommonOpts bo;
  BoundFlags bf;
  {
    CLI::App* c = app.add_subcommand("bound", "Sieve upper bound on an instance");
    c->add_option("--instance", bf.instance, "residue or quintic")
        ->check(CLI::IsMember({"residue", "quintic"}))
        ->capture_default_str();
    c->add_option("--n", bf.n, "Residue instance size N")->capture_default_str();
    c->add_option("--omega", bf.omega, "Forbidden residues (comma list)")
        ->capture_default_str();
    c->add_option("--box", bf.box, "Quintic coefficient box")->capture_default_str();
    c->add_option("--family", bf.family, "Quintic event family: five or 1112")
        ->capture_default_str();
    c->add_option("--z", bf.z, "Sifting limit")->capture_default_str();
    c->add_option("--level", bf.level, "Level D")->capture_default_str();
    c->add_option("--mode", bf.mode, "exact or model")
        ->check(CLI::IsMember({"exact", "model"}))
        ->capture_default_str();
    c->add_option("--model-c", bf.model_c, "Override model main coefficient c");
    c->add_option("--model-bigc", bf.model_bigc, "Override model constant C");
    c->add_option("--model-kappa", bf.model_kappa, "Override model exponent kappa");
    c->add_option("--model-theta", bf.model_theta, "Override model exponent theta");
    add_common(c, bo);
    c->callback([&] { run = [&] { return run_bound(bf, bo); }; });
  }

  // balance
  CommonOpts lo;
  std::string l_terms, l_param, l_tmin = "0", l_tmax;
  {
    CLI::App* c = app.add_subcommand("balance", "Exact minimax exponent balance");
    c->add_option("--terms", l_terms, "Comma list, e.g. \"X*D^-1/2,X^39/40*D^2\"")
        ->required();
    c->add_option("--param", l_param, "Parameter substituted as X^theta "
                                      "(default: the unique non-X name)");
    c->add_option("--theta-min", l_tmin, "Feasible interval lower end")
        ->capture_default_str();
    c->add_option("--theta-max", l_tmax, "Feasible interval upper end");
    add_common(c, lo);
    c->callback(
        [&] { run = [&] { return run_balance(l_terms, l_param, l_tmin, l_tmax, lo); }; });
  }

  // quintic-scan
  CommonOpts qo;
  ScanFlags qf;
  {
    CLI::App* c = app.add_subcommand(
        "quintic-scan", "Classify a coefficient box; summary with bounds");
    c->add_option("--box", qf.box, "Box: lo:hi cube or five c4..c0 intervals")
        ->capture_default_str();
    c->add_option("--max-prime", qf.max_prime, "Type columns for primes <= this")
        ->capture_default_str();
    c->add_option("--z", qf.z, "Sieve sifting limit (default max-prime + 1)");
    c->add_option("--level", qf.level, "Sieve level D")->capture_default_str();
    add_common(c, qo);
    c->callback([&] { run = [&] { return run_quintic_scan(qf, qo); }; });
  }

  // squarefree
  CommonOpts so;
  std::string s_x, s_t;
  {
    CLI::App* c = app.add_subcommand(
        "squarefree", "Truncated inclusion-exclusion on the squarefree family");
    c->add_option("--x", s_x, "X values (comma list)")->required();
    c->add_option("--t", s_t, "Truncations T (comma list)")->required();
    add_common(c, so);
    c->callback([&] { run = [&] { return run_squarefree(s_x, s_t, so); }; });
  }

  // euler
  CommonOpts eo;
  std::string e_local = "headline";
  std::int64_t e_p = 100'000;
  {
    CLI::App* c = app.add_subcommand("euler", "Euler product enclosure");
    c->add_option("--local", e_local, "one, zeta2-reciprocal, or headline")
        ->capture_default_str();
    c->add_option("--p", e_p, "Truncation bound P")->capture_default_str();
    add_common(c, eo);
    c->callback([&] { run = [&] { return run_euler(e_local, e_p, eo); }; });
  }

  // predict
  CommonOpts po;
  int p_i = 0;
  std::string p_x = "1";
  std::int64_t p_p = 100'000;
  {
    CLI::App* c = app.add_subcommand("predict", "Headline count prediction");
    c->add_option("--i", p_i, "Signature index: 0, 1, or 2")->required();
    c->add_option("--x", p_x, "Discriminant bound X")->capture_default_str();
    c->add_option("--p", p_p, "Euler truncation P")->capture_default_str();
    add_common(c, po);
    c->callback([&] { run = [&] { return run_predict(p_i, p_x, p_p, po); }; });
  }

  std::string out_path;
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(std::move(args));
    std::reverse(args.begin(), args.end());  // the vector overload wants
    app.parse(std::move(args));              // reversed arguments
    // the invoked subcommand's --out
    for (CLI::App* sub : app.get_subcommands())
      if (sub->count("--out")) out_path = sub->get_option("--out")->as<std::string>();
    write_output(run(), out_path);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
