// Multiplicative sieve densities.
//
// A DensityFunction assigns to every prime p an exact rational g(p) in
// [0, 1), the proportion of residues removed at p.  It extends
// multiplicatively to squarefree d.  g(p) = 1 would sift out every residue
// class and makes the Selberg weights singular, so it is rejected at the
// point of use.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>

#include "lambda2/rational.hpp"

namespace lambda2 {

class DensityFunction {
 public:
  // g(p) = v for every prime.
  static DensityFunction constant(const Rat& v);
  // g(p) = 1/p.
  static DensityFunction inverse_prime();
  // Explicit table; primes absent from the table get default_value.
  static DensityFunction from_table(std::map<std::int64_t, Rat> table,
                                    const Rat& default_value = Rat(0));
  // Arbitrary rule.  The callable must be pure (the plan builder and the
  // weight solver may evaluate it repeatedly).
  static DensityFunction from_function(
      std::function<Rat(std::int64_t)> rule);

  // g(p).  Throws domain_error unless 0 <= g(p) < 1 (g(p) = 1 is the
  // singular-density case).
  Rat at_prime(std::int64_t p) const;

  // Multiplicative extension prod_{p | d} g(p) for squarefree d >= 1.
  // Throws domain_error when d is not squarefree.
  Rat at(std::int64_t d) const;

 private:
  DensityFunction() = default;
  std::function<Rat(std::int64_t)> rule_;
};

}  // namespace lambda2
