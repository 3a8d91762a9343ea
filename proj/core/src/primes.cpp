#include "lambda2/primes.hpp"

#include <cmath>

#include "lambda2/errors.hpp"

namespace lambda2 {

std::vector<std::int64_t> primes_below(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound), false);
  for (std::int64_t p = 2; p < bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t q = p * p; q < bound; q += p)
      composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return n == p;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw domain_error("factorize requires n >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

int mobius(std::int64_t n) {
  if (n < 1) throw domain_error("mobius requires n >= 1");
  int k = 0;
  for (auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    ++k;
  }
  return k % 2 ? -1 : 1;
}

int omega(std::int64_t n) { return static_cast<int>(factorize(n).size()); }

Int tau3(std::int64_t d) {
  if (d < 1 || !is_squarefree(d))
    throw domain_error("tau3 requires squarefree d >= 1");
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(omega(d)));
  return out;
}

std::vector<std::int32_t> spf_table(std::int32_t bound) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(bound) + 1, 0);
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (spf[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t q = p; q <= bound; q += p)
      if (!spf[static_cast<std::size_t>(q)])
        spf[static_cast<std::size_t>(q)] = static_cast<std::int32_t>(p);
  }
  return spf;
}

}  // namespace lambda2
