// Selberg upper-bound sieve with exact rational weights.
//
// Given a multiplicative density g on the primes p < z and a level D, the
// sieve support is the set of squarefree d composed of those primes with
// d^2 < D.  Writing h(d) = prod_{p|d} g(p)/(1 - g(p)) and
// H = sum_{d in support} h(d), the optimal weights are
//
//     lambda_d = mu(d) * (prod_{p|d} 1/(1 - g(p))) * H_d / H,
//     H_d      = sum over m in support, gcd(m, d) = 1, (d m)^2 < D of h(m),
//
// normalized so lambda_1 = 1, with |lambda_d| <= 1, and the quadratic form
// sum_{d,e} lambda_d lambda_e g(lcm(d, e)) equal to 1/H exactly.  All of
// this is carried out in exact rational arithmetic.
//
// An upper bound for a sifted count comes in two modes:
//   - exact:  sum_{d,e} lambda_d lambda_e A(lcm(d, e)) with A supplied by
//             the instance (an exact rational, trivially >= the sifted
//             count by positivity of the square).
//   - model:  c X / H plus a remainder term
//             C * X^theta * sum_{m in support pairs} tau3(m) m^kappa g(m),
//             for instances that provide a remainder model
//             |A(d) - g(d) X| <= C * d^kappa * g(d) * X^theta.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lambda2/density.hpp"
#include "lambda2/rational.hpp"

namespace lambda2 {

struct PlanOptions {
  // Hard cap on the number of support elements enumerated; exceeding it
  // raises budget_error to keep exact runs at desk scale.
  std::uint64_t support_cap = 1'000'000;
};

// Frozen enumeration of the sieve support for one (g, z, D) triple.
class SievePlan {
 public:
  // Primes p < z with g(p) > 0 (zero-density primes impose no constraint
  // and are dropped before weight construction); support enumerated in
  // increasing order, starting with d = 1.  Throws domain_error if z < 2 or
  // if D <= 1 (empty support), budget_error if the support exceeds the cap.
  static SievePlan build(const DensityFunction& g, std::int64_t z,
                         const Rat& level, const PlanOptions& opts = {});

  std::int64_t z() const { return z_; }
  const Rat& level() const { return level_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }
  const std::vector<std::int64_t>& support() const { return support_; }

 private:
  std::int64_t z_ = 0;
  Rat level_;
  std::vector<std::int64_t> primes_;
  std::vector<std::int64_t> support_;
};

// Weight table over a plan's support, same order as plan.support().
struct SieveWeights {
  std::vector<std::int64_t> d;
  std::vector<Rat> lambda;
  Rat H;  // sum of h over the support

  // Index of a support element, or nullopt.
  std::optional<std::size_t> index_of(std::int64_t dd) const;
};

// h(d) = prod_{p | d} g(p) / (1 - g(p)) for squarefree d.
Rat h_of(const DensityFunction& g, std::int64_t d);

// H = sum_{d in support} h(d).
Rat big_H(const DensityFunction& g, const SievePlan& plan);

// Optimal Selberg weights; lambda_1 = 1 and |lambda_d| <= 1.
SieveWeights selberg_weights(const DensityFunction& g, const SievePlan& plan);

// sum_{d,e in support} lambda_d lambda_e g(lcm(d, e)), exact.
Rat quadratic_form(const DensityFunction& g, const SieveWeights& w);

// A sequence to be sifted: |A| = X elements with local data A(d) = number of
// elements in the "bad" residue classes mod d (d squarefree, composed of
// sifting primes).  Implementations must be thread-safe for concurrent
// count_in_classes calls.
class SiftedInstance {
 public:
  virtual ~SiftedInstance() = default;

  // Total number of elements X.
  virtual Rat size() const = 0;

  // Density of removed classes.
  virtual const DensityFunction& density() const = 0;

  // A(d): exact count of elements lying in a removed class mod p for every
  // p | d.  d squarefree with prime factors < z.
  virtual Int count_in_classes(std::int64_t d) const = 0;

  // Exact number of elements avoiding all removed classes mod p, p < z.
  // Default: inclusion-exclusion over squarefree d | P(z) via
  // count_in_classes (throws budget_error past the cap).
  virtual Int sifted_count_exact(std::int64_t z,
                                 std::uint64_t term_cap = 1'000'000) const;

  // Model A(d) = c * g(d) * X + r_d with |r_d| <= C * d^kappa * g(d) * X^theta,
  // used in model mode.  Instances without a model return nullopt.
  struct RemainderModel {
    Rat c{1};      // main coefficient
    Rat C{1};      // implied constant (convention: 1 unless stated)
    Rat kappa{0};
    Rat theta{0};
  };
  virtual std::optional<RemainderModel> remainder_model() const {
    return std::nullopt;
  }
};

enum class SieveMode { exact, model };

struct SieveReport {
  SieveMode mode = SieveMode::exact;
  Rat H;
  Rat main_bound;           // exact mode: the full quadratic form vs A;
                            // model mode: X / H
  double remainder_bound = 0.0;  // model mode: C X^theta sum tau3(m) m^kappa g(m)
  double total_bound = 0.0;      // to_double(main_bound) + remainder_bound
  Rat remainder_sum;        // model mode, kappa integral: the exact weighted
                            // sum the remainder bound is built from
  Rat level_exponent;       // model mode: remainder scales like D^(kappa+1)
  std::size_t support_size = 0;
};

struct BoundOptions {
  int threads = 1;
  // Cap on the model-mode sum over squarefree m < D (the tau3 remainder).
  std::uint64_t model_term_cap = 10'000'000;
};

// Upper bound for the sifted count of `inst` using `plan` (which must have
// been built with the instance's density).  Model mode requires the instance
// to provide a remainder model.
SieveReport sieve_upper_bound(const SiftedInstance& inst, const SievePlan& plan,
                              SieveMode mode, const BoundOptions& opts = {});

// CSV with header "d,lambda_num,lambda_den", one row per support element.
std::string weights_csv(const SieveWeights& w);

}  // namespace lambda2
