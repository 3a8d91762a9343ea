#include "lambda2/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "lambda2/errors.hpp"
#include "lambda2/primes.hpp"
#include "parallel.h"

namespace lambda2 {

namespace {

// Appends to `out` every squarefree product d > 1 of the given ascending
// primes with d * scale strictly below `limit` in the square sense:
// (d * scale)^2 < limit.  Throws budget_error past `cap` elements.
void enumerate_products_sq(const std::vector<std::int64_t>& primes,
                           std::int64_t scale, const Rat& limit,
                           std::uint64_t cap,
                           const std::function<void(std::int64_t)>& emit,
                           std::int64_t d, std::size_t from,
                           std::uint64_t& count) {
  for (std::size_t j = from; j < primes.size(); ++j) {
    Int cand = Int(d) * primes[j];
    Int scaled = cand * scale;
    if (!(Rat(scaled * scaled) < limit)) break;  // primes ascend: done
    if (!cand.fits_slong_p())
      throw domain_error("support element exceeds 64-bit range");
    std::int64_t nd = cand.get_si();
    if (++count > cap)
      throw budget_error("support enumeration exceeded cap of " +
                         std::to_string(cap));
    emit(nd);
    enumerate_products_sq(primes, scale, limit, cap, emit, nd, j + 1, count);
  }
}

// Squarefree products m of the given primes with m < limit (first power).
void enumerate_products_lin(const std::vector<std::int64_t>& primes,
                            const Rat& limit, std::uint64_t cap,
                            const std::function<void(std::int64_t)>& emit,
                            std::int64_t d, std::size_t from,
                            std::uint64_t& count) {
  for (std::size_t j = from; j < primes.size(); ++j) {
    Int cand = Int(d) * primes[j];
    if (!(Rat(cand) < limit)) break;
    if (!cand.fits_slong_p())
      throw domain_error("enumeration element exceeds 64-bit range");
    std::int64_t nd = cand.get_si();
    if (++count > cap)
      throw budget_error("model-term enumeration exceeded cap of " +
                         std::to_string(cap));
    emit(nd);
    enumerate_products_lin(primes, limit, cap, emit, nd, j + 1, count);
  }
}

// 1/(1 - g(p)) product over p | d.
Rat inv_cofactor(const DensityFunction& g, std::int64_t d) {
  Rat out(1);
  for (std::int64_t p : prime_factors(d)) out /= (1 - g.at_prime(p));
  return out;
}

}  // namespace

SievePlan SievePlan::build(const DensityFunction& g, std::int64_t z,
                           const Rat& level, const PlanOptions& opts) {
  if (z < 2) throw domain_error("sifting limit z must be >= 2");
  if (!(level > 1)) throw domain_error("empty support: level D must exceed 1");
  SievePlan plan;
  plan.z_ = z;
  plan.level_ = level;
  for (std::int64_t p : primes_below(z))
    if (g.at_prime(p) > 0) plan.primes_.push_back(p);
  plan.support_.push_back(1);
  std::uint64_t count = 1;
  enumerate_products_sq(
      plan.primes_, 1, level, opts.support_cap,
      [&plan](std::int64_t d) { plan.support_.push_back(d); }, 1, 0, count);
  std::sort(plan.support_.begin(), plan.support_.end());
  return plan;
}

std::optional<std::size_t> SieveWeights::index_of(std::int64_t dd) const {
  auto it = std::lower_bound(d.begin(), d.end(), dd);
  if (it == d.end() || *it != dd) return std::nullopt;
  return static_cast<std::size_t>(it - d.begin());
}

Rat h_of(const DensityFunction& g, std::int64_t d) {
  if (d < 1) throw domain_error("h requires d >= 1");
  Rat out(1);
  for (auto& [p, e] : factorize(d)) {
    if (e > 1) throw domain_error("h requires squarefree d");
    Rat gp = g.at_prime(p);
    out *= gp / (1 - gp);
  }
  return out;
}

Rat big_H(const DensityFunction& g, const SievePlan& plan) {
  Rat H(0);
  for (std::int64_t d : plan.support()) H += h_of(g, d);
  return H;
}

SieveWeights selberg_weights(const DensityFunction& g, const SievePlan& plan) {
  const auto& support = plan.support();
  if (support.empty()) throw domain_error("empty support");
  const std::size_t n = support.size();

  std::vector<Rat> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = h_of(g, support[i]);
  Rat H = std::accumulate(h.begin(), h.end(), Rat(0));

  SieveWeights w;
  w.d = support;
  w.H = H;
  w.lambda.resize(n);
  // lambda_d = mu(d) * prod_{p|d} 1/(1-g(p)) * H_d / H, where H_d sums h(m)
  // over support m coprime to d with (d m)^2 < D.  H_1 = H gives lambda_1 = 1.
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t di = support[i];
    Int di2 = Int(di) * di;
    Rat Hd(0);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t m = support[j];
      if (!(Rat(di2 * m * m) < plan.level())) break;  // support ascends
      if (std::gcd(di, m) != 1) continue;
      Hd += h[j];
    }
    w.lambda[i] = Rat(mobius(di)) * inv_cofactor(g, di) * Hd / H;
  }
  return w;
}

Rat quadratic_form(const DensityFunction& g, const SieveWeights& w) {
  const std::size_t n = w.d.size();
  std::vector<Rat> gd(n);
  for (std::size_t i = 0; i < n; ++i) gd[i] = g.at(w.d[i]);
  Rat total(0);
  for (std::size_t i = 0; i < n; ++i) {
    // diagonal term
    total += w.lambda[i] * w.lambda[i] * gd[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t q = std::gcd(w.d[i], w.d[j]);
      // g(lcm) = g(d_i) g(d_j) / g(gcd); gcd divides both, so g(gcd) > 0
      // whenever the weights came from a plan (zero-density primes dropped).
      Rat glcm = gd[i] * gd[j] / g.at(q);
      total += 2 * w.lambda[i] * w.lambda[j] * glcm;
    }
  }
  return total;
}

Int SiftedInstance::sifted_count_exact(std::int64_t z,
                                       std::uint64_t term_cap) const {
  // Inclusion-exclusion over squarefree products of the sifting primes,
  // pruning branches with A(d) = 0 (A shrinks under divisibility).
  std::vector<std::int64_t> ps;
  for (std::int64_t p : primes_below(z))
    if (density().at_prime(p) > 0) ps.push_back(p);
  Int total = count_in_classes(1);
  std::uint64_t used = 0;
  std::function<void(std::int64_t, std::size_t, int)> rec =
      [&](std::int64_t d, std::size_t from, int sign) {
        for (std::size_t j = from; j < ps.size(); ++j) {
          Int cand = Int(d) * ps[j];
          if (!cand.fits_slong_p()) continue;
          std::int64_t nd = cand.get_si();
          if (++used > term_cap)
            throw budget_error("inclusion-exclusion exceeded term budget");
          Int a = count_in_classes(nd);
          if (a == 0) continue;
          total += sign * a;
          rec(nd, j + 1, -sign);
        }
      };
  rec(1, 0, -1);
  return total;
}

SieveReport sieve_upper_bound(const SiftedInstance& inst, const SievePlan& plan,
                              SieveMode mode, const BoundOptions& opts) {
  const DensityFunction& g = inst.density();
  SieveWeights w = selberg_weights(g, plan);

  SieveReport rep;
  rep.mode = mode;
  rep.H = w.H;
  rep.support_size = w.d.size();

  if (mode == SieveMode::exact) {
    // sum_{d,e} lambda_d lambda_e A(lcm(d,e)): fold equal lcm values first,
    // then query each unique A(m) once.
    const std::size_t n = w.d.size();
    const int nt = std::max(1, opts.threads);
    std::vector<std::unordered_map<std::int64_t, Rat>> shard(
        static_cast<std::size_t>(nt));
    internal::run_partitioned(n, nt, [&](std::size_t lo, std::size_t hi, int t) {
      auto& coeff = shard[static_cast<std::size_t>(t)];
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          std::int64_t q = std::gcd(w.d[i], w.d[j]);
          std::int64_t m = w.d[i] / q * w.d[j];
          Rat c = w.lambda[i] * w.lambda[j];
          if (j > i) c *= 2;
          coeff[m] += c;
        }
      }
    });
    std::unordered_map<std::int64_t, Rat> coeff;
    for (auto& s : shard)
      for (auto& [m, c] : s) coeff[m] += c;
    std::vector<std::int64_t> ms;
    ms.reserve(coeff.size());
    for (auto& [m, c] : coeff) ms.push_back(m);
    std::sort(ms.begin(), ms.end());
    std::vector<Int> am(ms.size());
    internal::run_partitioned(ms.size(), nt, [&](std::size_t lo, std::size_t hi, int) {
      for (std::size_t k = lo; k < hi; ++k) am[k] = inst.count_in_classes(ms[k]);
    });
    Rat bound(0);
    for (std::size_t k = 0; k < ms.size(); ++k)
      bound += coeff.at(ms[k]) * Rat(am[k]);
    rep.main_bound = bound;
    rep.remainder_bound = 0.0;
    rep.total_bound = to_double(bound);
    return rep;
  }

  auto model = inst.remainder_model();
  if (!model)
    throw domain_error("model mode requires a remainder model on the instance");
  Rat X = inst.size();
  rep.main_bound = model->c * X / w.H;
  rep.level_exponent = model->kappa + 1;

  // remainder = C * X^theta * sum over squarefree m < D, m | P(z), of
  // tau3(m) m^kappa g(m); the sum is exact when kappa is a nonnegative
  // integer.
  bool kappa_int = is_integer(model->kappa) && model->kappa >= 0;
  Rat sum_exact(0);
  double sum_fp = 0.0;
  auto add_term = [&](std::int64_t m) {
    Rat t3g = Rat(tau3(m)) * g.at(m);
    if (kappa_int) {
      sum_exact += t3g * rat_pow(Rat(m), model->kappa.get_num().get_si());
    } else {
      sum_fp += to_double(t3g) *
                std::pow(static_cast<double>(m), to_double(model->kappa));
    }
  };
  add_term(1);
  std::uint64_t count = 0;
  enumerate_products_lin(plan.primes(), plan.level(), opts.model_term_cap,
                         add_term, 1, 0, count);
  if (kappa_int) {
    rep.remainder_sum = model->C * sum_exact;
    sum_fp = to_double(rep.remainder_sum);
  } else {
    sum_fp *= to_double(model->C);
  }
  double xtheta = is_integer(model->theta)
                      ? to_double(rat_pow(X, model->theta.get_num().get_si()))
                      : std::pow(to_double(X), to_double(model->theta));
  rep.remainder_bound = sum_fp * xtheta;
  rep.total_bound = to_double(rep.main_bound) + rep.remainder_bound;
  return rep;
}

std::string weights_csv(const SieveWeights& w) {
  std::string out = "d,lambda_num,lambda_den\n";
  for (std::size_t i = 0; i < w.d.size(); ++i) {
    out += std::to_string(w.d[i]);
    out += ',';
    out += w.lambda[i].get_num().get_str();
    out += ',';
    out += w.lambda[i].get_den().get_str();
    out += '\n';
  }
  return out;
}

}  // namespace lambda2
