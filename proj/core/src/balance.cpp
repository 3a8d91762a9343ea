#include "lambda2/balance.hpp"

#include <algorithm>
#include <cctype>

#include "lambda2/errors.hpp"

namespace lambda2 {

// ───────────────────── power terms ─────────────────────

Rat PowerTerm::exponent_of(const std::string& name) const {
  auto it = exponents.find(name);
  return it == exponents.end() ? Rat(0) : it->second;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

PowerTerm parse_power_term(const std::string& text) {
  PowerTerm t;
  std::string body = strip(text);
  if (body.empty()) throw domain_error("empty power term");
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t star = body.find('*', pos);
    std::string factor =
        strip(body.substr(pos, (star == std::string::npos ? body.size() : star) - pos));
    pos = (star == std::string::npos) ? body.size() + 1 : star + 1;
    if (factor.empty()) throw domain_error("empty factor in power term");
    if (factor == "1") continue;
    std::string name = factor;
    Rat expo(1);
    std::size_t caret = factor.find('^');
    if (caret != std::string::npos) {
      name = strip(factor.substr(0, caret));
      expo = parse_rat(strip(factor.substr(caret + 1)));
    }
    if (name.empty()) throw domain_error("factor with empty name: " + factor);
    for (char ch : name)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw domain_error("invalid parameter name: " + name);
    if (name == "eps") {
      t.eps_padded = true;
      continue;
    }
    if (name == "log") {
      t.log_power += expo;
      continue;
    }
    t.exponents[name] += expo;
  }
  return t;
}

std::string power_term_str(const PowerTerm& t) {
  std::string out;
  for (const auto& [name, e] : t.exponents) {
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += "^" + rat_str(e);
  }
  if (t.eps_padded) {
    if (!out.empty()) out += '*';
    out += "eps";
  }
  if (t.log_power != 0) {
    if (!out.empty()) out += '*';
    out += (t.log_power == 1) ? "log" : "log^" + rat_str(t.log_power);
  }
  return out.empty() ? "1" : out;
}

// ───────────────────── balancing ─────────────────────

Rat substitute(const PowerTerm& t, const std::string& parameter,
               const Rat& theta) {
  for (const auto& [name, e] : t.exponents)
    if (name != "X" && name != parameter && e != 0)
      throw domain_error("term references parameter '" + name +
                         "' not under balance");
  return t.exponent_of("X") + t.exponent_of(parameter) * theta;
}

BalanceResult balance(const BalanceProblem& p) {
  if (p.terms.empty()) throw domain_error("no terms to balance");
  if (p.theta_max && *p.theta_max < p.theta_min)
    throw domain_error("empty balance interval");
  const std::size_t n = p.terms.size();
  std::vector<Rat> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = substitute(p.terms[i], p.parameter, Rat(0));
    b[i] = substitute(p.terms[i], p.parameter, Rat(1)) - a[i];
  }

  // The maximum decreases forever iff every slope is negative on an
  // interval unbounded above.
  if (!p.theta_max && std::all_of(b.begin(), b.end(),
                                  [](const Rat& s) { return s < 0; })) {
    BalanceResult r;
    r.unbounded = true;
    return r;
  }

  // max of affine functions is convex piecewise linear; its minimum over an
  // interval is attained at an endpoint or a pairwise intersection.
  std::vector<Rat> cands{p.theta_min};
  if (p.theta_max) cands.push_back(*p.theta_max);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (b[i] == b[j]) continue;
      Rat th = (a[i] - a[j]) / (b[j] - b[i]);
      if (th < p.theta_min) continue;
      if (p.theta_max && th > *p.theta_max) continue;
      cands.push_back(th);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  auto value_at = [&](const Rat& th) {
    Rat v = a[0] + b[0] * th;
    for (std::size_t i = 1; i < n; ++i) {
      Rat cur = a[i] + b[i] * th;
      if (cur > v) v = cur;
    }
    return v;
  };

  BalanceResult r;
  bool first = true;
  for (const Rat& th : cands) {
    Rat v = value_at(th);
    if (first || v < r.exponent) {
      first = false;
      r.theta = th;
      r.exponent = v;
    }
    // candidates are sorted ascending, so ties keep the smallest theta
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] + b[i] * r.theta == r.exponent) r.active.push_back(i);
  return r;
}

Rat power_saving_exponent(const Rat& a, const Rat& delta, const Rat& A) {
  if (!(delta > 0)) throw domain_error("power saving requires delta > 0");
  if (A < 0) throw domain_error("power saving requires A >= 0");
  // balancing {X^a * D^(-1/2), X^(a-delta) * D^(A+1)} lands at
  // theta = delta/(A + 3/2) * 1/... : a - theta/2 = a - delta + (A+1) theta
  // => theta = delta / (A + 3/2), exponent = a - delta/(2A + 3).
  return a - delta / (2 * A + 3);
}

BalanceResult field_count_budget(const Rat& degenerate_e, const Rat& cutoff_e,
                                 const Rat& tail_u) {
  BalanceProblem p;
  PowerTerm tail, cutoff, degen;
  tail.exponents["X"] = Rat(1);
  tail.exponents["T"] = -tail_u;
  cutoff.exponents["X"] = cutoff_e;
  cutoff.exponents["T"] = Rat(3);
  degen.exponents["X"] = degenerate_e;
  degen.exponents["T"] = Rat(1);
  p.terms = {tail, cutoff, degen};
  p.parameter = "T";
  p.theta_min = Rat(0);
  return balance(p);
}

}  // namespace lambda2
