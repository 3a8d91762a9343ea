// Truncated inclusion-exclusion with rigorous tails, Euler products and
// zeta values as enclosures, and the over-ring (local factor) budgets.
//
// The inclusion-exclusion engine works on an abstract family W(d, X) with a
// uniform tail model W(d, X) <= C * X / d^(2-eps); the truncated estimate is
// sum_{d<T, d squarefree} mu(d) W(d, X) and the discarded tail is bounded by
// the integral majorant C * X * (T-1)^(-1+eps) / (1-eps).
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lambda2/interval.hpp"
#include "lambda2/rational.hpp"

namespace lambda2 {

// A "non-maximal at every prime dividing d" event family.
class IEFamily {
 public:
  virtual ~IEFamily() = default;

  // Exact count of objects among X that are non-maximal at every p | d
  // (d squarefree).  W(1, X) = total count.
  virtual Int W(std::int64_t d, const Int& X) const = 0;

  // Model density of the event at p (multiplicative over p | d).
  virtual Rat c_p(std::int64_t p) const = 0;

  // Uniform tail model W(d, X) <= C * X / d^(2-eps).
  virtual Rat tail_C() const = 0;
  virtual Rat tail_eps() const = 0;
};

struct IEResult {
  Rat estimate;    // sum_{d<T, squarefree} mu(d) W(d, X)
  Rat tail_bound;  // C X (T-1)^(-1+eps) / (1-eps), rounded up when irrational
};

// Truncated inclusion-exclusion.  Throws domain_error when T < 2.
// Contract: |true alternating sum - estimate| <= tail_bound whenever the
// family's tail model holds.
IEResult truncated_ie(const IEFamily& fam, const Int& X, std::int64_t T);

// Demo family with the same X/d^2 uniformity shape as the ring case:
// W(d, X) = floor(X / d^2) (integers <= X divisible by d^2), c_p = 1/p^2,
// exact tail constants (C, eps) = (1, 0).  Full truncation T > sqrt(X)
// recovers the exact squarefree count.
class SquarefreeFamily : public IEFamily {
 public:
  Int W(std::int64_t d, const Int& X) const override;
  Rat c_p(std::int64_t p) const override;
  Rat tail_C() const override { return Rat(1); }
  Rat tail_eps() const override { return Rat(0); }
};

// Euler product over primes with an explicit tail certificate:
// |log f(p)| <= kappa * p^(-s) for p > P.
struct EulerProductSpec {
  std::function<Rat(std::int64_t)> local;  // f(p) > 0
  double kappa = 0.0;
  double s = 2.0;  // must be > 1
};

// Enclosure of prod_p f(p): partial product over p <= P with a floating
// error budget, times exp(+-kappa * P^(1-s)/(s-1)).  Throws domain_error
// when s <= 1, P < 2, or some f(p) <= 0.
Interval euler_product(const EulerProductSpec& spec, std::int64_t P);

// zeta(s) for integer s >= 2 by Euler-Maclaurin with an explicit remainder
// bound; at least 12 correct digits.
Interval zeta_em(int s);

// zeta(2)^2 zeta(3)^2 zeta(4)^2 zeta(5) / (2 n_i); n_i > 0 is caller input.
Interval zeta_constant_c(const Rat& n_i);

// Enclosure of prod_p (1 + p^-2 - p^-4 - p^-5) using the partial product
// over p <= P.  Computed as zeta(2) * prod_p (1 - 2p^-4 - p^-5 + p^-6 + p^-7)
// — the same number with a fourth-power tail, so the enclosure width decays
// like P^-3 instead of P^-1.
Interval headline_constant(std::int64_t P);

// Enclosure of sum_{k>=1} p^(min(2k-2, 20k/11) - 2k): the k <= 11 terms are
// each exactly p^-2; for k >= 12 the exponent is -2k/11 and the tail beyond
// K is bounded by the geometric series with ratio p^(-2/11).
Interval brakenhoff_local_factor(std::int64_t p, int K);

// Exact k-th term of the local factor when it is rational (k <= 11, where
// min(2k-2, 20k/11) = 2k-2): always 1/p^2.  Throws domain_error for k > 11.
Rat brakenhoff_term_exact(std::int64_t p, int k);

// zeta(2) * prod_{p|d} brakenhoff_local_factor(p, K): the numerical shell of
// the uniform over-ring bound's X-coefficient.  d squarefree.
Interval overring_budget(std::int64_t d, int K = 200);

// Headline prediction d_i * product * X for i in {0, 1, 2} with
// d = (1/240, 1/24, 1/16).
struct Prediction {
  Rat d_i;
  Interval product;  // enclosure of the Euler product
  Interval value;    // d_i * product * X
  std::int64_t truncation_P;
};
Prediction headline_prediction(int i, const Rat& X, std::int64_t P = 100'000);

}  // namespace lambda2
