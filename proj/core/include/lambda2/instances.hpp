// Concrete sifted sequences: residue avoidance on an integer interval, and
// monic quintic coefficient boxes with factorization-type events.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "lambda2/density.hpp"
#include "lambda2/quintic.hpp"
#include "lambda2/sieve.hpp"

namespace lambda2 {

// a_n = 1 for 1 <= n <= N; at each prime p a forbidden residue set
// Omega_p within Z/p.  A(d) counts n <= N hitting Omega_p mod every p | d;
// g(p) = |Omega_p| / p.  The remainder model |A(d) - g(d) N| <= prod |Omega_p|
// = d^1 * g(d) * N^0 holds by Chinese-remainder box counting, giving
// (C, kappa, theta) = (1, 1, 0).
class ResidueAvoidanceInstance : public SiftedInstance {
 public:
  // omega_rule(p) must return residues in [0, p); called once per prime and
  // cached.  `budget` caps direct enumeration work (sifted_count_exact).
  ResidueAvoidanceInstance(std::int64_t N,
                           std::function<std::vector<std::int64_t>(std::int64_t)> omega_rule,
                           std::uint64_t budget = 1'000'000'000);

  // Rule with Omega_p = {r mod p : r in residues} at every prime.
  static std::function<std::vector<std::int64_t>(std::int64_t)>
  fixed_residue_rule(std::vector<std::int64_t> residues);

  Rat size() const override;
  const DensityFunction& density() const override;
  Int count_in_classes(std::int64_t d) const override;
  Int sifted_count_exact(std::int64_t z,
                         std::uint64_t term_cap = 1'000'000) const override;
  std::optional<RemainderModel> remainder_model() const override;

  std::int64_t N() const { return N_; }
  const std::vector<std::int64_t>& omega(std::int64_t p) const;

 private:
  std::int64_t N_;
  std::function<std::vector<std::int64_t>(std::int64_t)> rule_;
  mutable std::map<std::int64_t, std::vector<std::int64_t>> cache_;
  mutable std::mutex mu_;
  DensityFunction g_;
  std::uint64_t budget_;
};

// Per-coordinate inclusive coefficient intervals, order (c4, c3, c2, c1, c0).
struct CoeffBox {
  std::array<std::pair<long long, long long>, 5> range;

  static CoeffBox cube(long long lo, long long hi);
  static CoeffBox single(const QuinticPoly& f);
  std::uint64_t cardinality() const;
  // Lexicographic enumeration on (c4, ..., c0).
  QuinticPoly at(std::uint64_t index) const;
};

// Box of monic quintics sifted by one event family: the removed class at p
// is T_p(family) (unramified f mod p with the family's factorization type),
// so the sieve bounds the count of f avoiding the event at every p < z.
//
// Construction enumerates the box once, computing per-polynomial event
// membership bits for all primes p < z, then a superset-sum table so A(d)
// is O(1) per query.
class QuinticBoxInstance : public SiftedInstance {
 public:
  QuinticBoxInstance(const CoeffBox& box, Family family, std::int64_t z,
                     std::uint64_t budget = 1'000'000'000, int threads = 1);

  Rat size() const override;
  const DensityFunction& density() const override;
  Int count_in_classes(std::int64_t d) const override;
  Int sifted_count_exact(std::int64_t z,
                         std::uint64_t term_cap = 1'000'000) const override;

  const CoeffBox& box() const { return box_; }
  Family family() const { return family_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }

 private:
  CoeffBox box_;
  Family family_;
  std::int64_t z_;
  std::vector<std::int64_t> primes_;           // p < z
  std::vector<std::uint64_t> superset_count_;  // A over prime-subset masks
  std::uint64_t sifted_;                       // mask == 0 count
  DensityFunction g_;
};

// Exact count of degenerate polynomials in the box.
std::uint64_t degenerate_count_exact(const CoeffBox& box,
                                     std::uint64_t budget = 1'000'000'000,
                                     int threads = 1);

// One CSV row per polynomial: c4..c0, disc, degenerate flag, and the
// factorization type at each prime (sorted digits, R for ramified).
// Header included.
std::string quintic_scan_csv(const CoeffBox& box,
                             const std::vector<std::int64_t>& primes,
                             std::uint64_t budget = 1'000'000'000);

}  // namespace lambda2
