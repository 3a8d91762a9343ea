// Prime tables and elementary multiplicative-function utilities.
#pragma once

#include <cstdint>
#include <vector>

#include "lambda2/rational.hpp"

namespace lambda2 {

// All primes p < bound (strict), ascending.
std::vector<std::int64_t> primes_below(std::int64_t bound);

bool is_prime(std::int64_t n);

// Distinct prime factors of n >= 1, ascending.  Trial division; intended for
// desk-scale arguments (n up to ~1e14).
std::vector<std::int64_t> prime_factors(std::int64_t n);

// Prime factorization as (p, multiplicity) pairs, ascending p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_squarefree(std::int64_t n);

// Moebius function; 0 on non-squarefree input.
int mobius(std::int64_t n);

// Number of distinct prime factors.
int omega(std::int64_t n);

// Divisor-count of d^2 for squarefree d: tau3(d) = 3^omega(d).
// Throws domain_error on non-squarefree input.
Int tau3(std::int64_t d);

// Smallest-prime-factor table for 0..bound; spf[0] = spf[1] = 0.
std::vector<std::int32_t> spf_table(std::int32_t bound);

}  // namespace lambda2
