#include "lambda2/instances.hpp"

#include <algorithm>
#include <numeric>

#include "lambda2/errors.hpp"
#include "lambda2/primes.hpp"
#include "parallel.h"

namespace lambda2 {

// ───────────────────── residue avoidance ─────────────────────

ResidueAvoidanceInstance::ResidueAvoidanceInstance(
    std::int64_t N, std::function<std::vector<std::int64_t>(std::int64_t)> omega_rule,
    std::uint64_t budget)
    : N_(N),
      rule_(std::move(omega_rule)),
      g_(DensityFunction::from_function([this](std::int64_t p) {
        return make_rat(static_cast<long long>(omega(p).size()), p);
      })),
      budget_(budget) {
  if (N < 0) throw domain_error("instance size must be nonnegative");
}

std::function<std::vector<std::int64_t>(std::int64_t)>
ResidueAvoidanceInstance::fixed_residue_rule(
    std::vector<std::int64_t> residues) {
  return [residues = std::move(residues)](std::int64_t p) {
    std::vector<std::int64_t> out;
    for (std::int64_t r : residues) out.push_back(((r % p) + p) % p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
}

const std::vector<std::int64_t>& ResidueAvoidanceInstance::omega(
    std::int64_t p) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(p);
  if (it != cache_.end()) return it->second;
  std::vector<std::int64_t> om = rule_(p);
  std::sort(om.begin(), om.end());
  om.erase(std::unique(om.begin(), om.end()), om.end());
  for (std::int64_t r : om)
    if (r < 0 || r >= p)
      throw domain_error("forbidden residue outside [0, p) at p=" +
                         std::to_string(p));
  return cache_.emplace(p, std::move(om)).first->second;
}

Rat ResidueAvoidanceInstance::size() const { return Rat(static_cast<long>(N_)); }

const DensityFunction& ResidueAvoidanceInstance::density() const { return g_; }

Int ResidueAvoidanceInstance::count_in_classes(std::int64_t d) const {
  if (d < 1) throw domain_error("A(d) requires d >= 1");
  std::vector<std::int64_t> ps;
  for (auto& [p, e] : factorize(d)) {
    if (e > 1) throw domain_error("A(d) requires squarefree d");
    ps.push_back(p);
  }
  // Chinese-remainder enumeration of the forbidden classes mod d, counting
  // members of [1, N] in each.
  std::uint64_t classes = 1;
  for (std::int64_t p : ps) {
    classes *= omega(p).size();
    if (classes > budget_)
      throw budget_error("residue-class enumeration exceeds budget");
    if (classes == 0) return Int(0);
  }
  Int total(0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec =
      [&](std::size_t i, std::int64_t mod, std::int64_t rem) {
        if (i == ps.size()) {
          // count n in [1, N] with n ≡ rem (mod mod)
          if (rem == 0)
            total += N_ / mod;
          else if (rem <= N_)
            total += (N_ - rem) / mod + 1;
          return;
        }
        std::int64_t p = ps[i];
        // x ≡ rem (mod mod), x ≡ r (mod p): x = rem + mod * t,
        // t ≡ (r - rem) * mod^{-1} (mod p)
        std::int64_t minv = 1;
        {
          std::int64_t mm = mod % p;
          // Fermat inverse; p prime
          std::int64_t e = p - 2, base = mm, acc = 1;
          while (e) {
            if (e & 1) acc = static_cast<std::int64_t>(
                static_cast<__int128>(acc) * base % p);
            base = static_cast<std::int64_t>(
                static_cast<__int128>(base) * base % p);
            e >>= 1;
          }
          minv = acc;
        }
        for (std::int64_t r : omega(p)) {
          std::int64_t diff = ((r - rem) % p + p) % p;
          std::int64_t t = static_cast<std::int64_t>(
              static_cast<__int128>(diff) * minv % p);
          rec(i + 1, mod * p, rem + mod * t);
        }
      };
  rec(0, 1, 0);
  return total;
}

Int ResidueAvoidanceInstance::sifted_count_exact(std::int64_t z,
                                                 std::uint64_t) const {
  std::vector<std::int64_t> ps = primes_below(z);
  std::vector<std::vector<char>> bad;
  std::vector<std::int64_t> active;
  for (std::int64_t p : ps) {
    const auto& om = omega(p);
    if (om.empty()) continue;
    std::vector<char> mark(static_cast<std::size_t>(p), 0);
    for (std::int64_t r : om) mark[static_cast<std::size_t>(r)] = 1;
    bad.push_back(std::move(mark));
    active.push_back(p);
  }
  if (static_cast<std::uint64_t>(N_) * std::max<std::size_t>(active.size(), 1) >
      budget_)
    throw budget_error("direct sifted enumeration exceeds budget");
  Int count(0);
  for (std::int64_t n = 1; n <= N_; ++n) {
    bool hit = false;
    for (std::size_t i = 0; i < active.size() && !hit; ++i)
      hit = bad[i][static_cast<std::size_t>(n % active[i])] != 0;
    if (!hit) count += 1;
  }
  return count;
}

std::optional<SiftedInstance::RemainderModel>
ResidueAvoidanceInstance::remainder_model() const {
  // |A(d) - g(d) N| < prod_{p|d} |Omega_p| = d g(d): each CRT class
  // contributes floor-vs-exact error below 1.
  return RemainderModel{Rat(1), Rat(1), Rat(1), Rat(0)};
}

// ───────────────────── coefficient boxes ─────────────────────

CoeffBox CoeffBox::cube(long long lo, long long hi) {
  if (lo > hi) throw domain_error("box interval with lo > hi");
  CoeffBox b;
  for (auto& r : b.range) r = {lo, hi};
  return b;
}

CoeffBox CoeffBox::single(const QuinticPoly& f) {
  CoeffBox b;
  for (std::size_t i = 0; i < 5; ++i) b.range[i] = {f.c[i], f.c[i]};
  return b;
}

std::uint64_t CoeffBox::cardinality() const {
  unsigned __int128 card = 1;
  for (auto& [lo, hi] : range) {
    if (lo > hi) throw domain_error("box interval with lo > hi");
    card *= static_cast<unsigned __int128>(hi - lo + 1);
    if (card > static_cast<unsigned __int128>(1) << 62)
      throw budget_error("box cardinality exceeds 2^62");
  }
  return static_cast<std::uint64_t>(card);
}

QuinticPoly CoeffBox::at(std::uint64_t index) const {
  QuinticPoly f;
  // lexicographic on (c4, ..., c0): c0 varies fastest
  for (int i = 4; i >= 0; --i) {
    auto [lo, hi] = range[static_cast<std::size_t>(i)];
    std::uint64_t width = static_cast<std::uint64_t>(hi - lo + 1);
    f.c[static_cast<std::size_t>(i)] =
        lo + static_cast<long long>(index % width);
    index /= width;
  }
  return f;
}

// ───────────────────── quintic box instance ─────────────────────

QuinticBoxInstance::QuinticBoxInstance(const CoeffBox& box, Family family,
                                       std::int64_t z, std::uint64_t budget,
                                       int threads)
    : box_(box),
      family_(family),
      z_(z),
      g_(DensityFunction::from_function(
          [family](std::int64_t p) { return local_density(p, family); })) {
  if (z < 2) throw domain_error("sifting limit z must be >= 2");
  primes_ = primes_below(z);
  if (primes_.size() > 24)
    throw budget_error("too many event primes for mask table (z too large)");
  const std::uint64_t card = box.cardinality();
  if (card * std::max<std::size_t>(primes_.size(), 1) > budget)
    throw budget_error("box enumeration exceeds budget");

  const std::size_t nmask = std::size_t(1) << primes_.size();
  const int nt = std::max(1, threads);
  std::vector<std::vector<std::uint64_t>> shard(
      static_cast<std::size_t>(nt), std::vector<std::uint64_t>(nmask, 0));
  internal::run_partitioned(
      static_cast<std::size_t>(card), nt,
      [&](std::size_t lo, std::size_t hi, int t) {
        auto& counts = shard[static_cast<std::size_t>(t)];
        for (std::size_t idx = lo; idx < hi; ++idx) {
          QuinticPoly f = box.at(idx);
          std::uint32_t mask = 0;
          for (std::size_t b = 0; b < primes_.size(); ++b)
            if (event_membership(f, primes_[b], family))
              mask |= std::uint32_t(1) << b;
          ++counts[mask];
        }
      });
  superset_count_.assign(nmask, 0);
  for (auto& s : shard)
    for (std::size_t m = 0; m < nmask; ++m) superset_count_[m] += s[m];
  sifted_ = superset_count_[0];
  // zeta transform over supersets: entry m becomes the count of box members
  // whose event set contains m.
  for (std::size_t b = 0; b < primes_.size(); ++b)
    for (std::size_t m = 0; m < nmask; ++m)
      if (!(m & (std::size_t(1) << b)))
        superset_count_[m] += superset_count_[m | (std::size_t(1) << b)];
}

Rat QuinticBoxInstance::size() const {
  return Rat(static_cast<unsigned long>(box_.cardinality()));
}

const DensityFunction& QuinticBoxInstance::density() const { return g_; }

Int QuinticBoxInstance::count_in_classes(std::int64_t d) const {
  if (d < 1) throw domain_error("A(d) requires d >= 1");
  std::uint32_t mask = 0;
  for (auto& [p, e] : factorize(d)) {
    if (e > 1) throw domain_error("A(d) requires squarefree d");
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
      throw domain_error("A(d) with a prime factor outside the sifting range");
    mask |= std::uint32_t(1)
            << static_cast<std::uint32_t>(it - primes_.begin());
  }
  return Int(static_cast<unsigned long>(superset_count_[mask]));
}

Int QuinticBoxInstance::sifted_count_exact(std::int64_t z,
                                           std::uint64_t) const {
  if (z > z_)
    throw domain_error("sifted count beyond the instance's prime range");
  std::uint32_t B = 0;
  for (std::size_t b = 0; b < primes_.size(); ++b)
    if (primes_[b] < z) B |= std::uint32_t(1) << b;
  if (B == (std::uint32_t(1) << primes_.size()) - 1)
    return Int(static_cast<unsigned long>(sifted_));
  // inclusion-exclusion over subsets of B on the superset table
  Int total(0);
  std::uint32_t sub = B;
  while (true) {
    int bits = __builtin_popcount(sub);
    Int term(static_cast<unsigned long>(superset_count_[sub]));
    total += (bits % 2 ? -term : term);
    if (sub == 0) break;
    sub = (sub - 1) & B;
  }
  return total;
}

// ───────────────────── box-level reports ─────────────────────

std::uint64_t degenerate_count_exact(const CoeffBox& box, std::uint64_t budget,
                                     int threads) {
  const std::uint64_t card = box.cardinality();
  if (card > budget) throw budget_error("box enumeration exceeds budget");
  const int nt = std::max(1, threads);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(nt), 0);
  internal::run_partitioned(
      static_cast<std::size_t>(card), nt,
      [&](std::size_t lo, std::size_t hi, int t) {
        std::uint64_t n = 0;
        for (std::size_t idx = lo; idx < hi; ++idx)
          if (is_degenerate(box.at(idx))) ++n;
        partial[static_cast<std::size_t>(t)] = n;
      });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t(0));
}

std::string quintic_scan_csv(const CoeffBox& box,
                             const std::vector<std::int64_t>& primes,
                             std::uint64_t budget) {
  const std::uint64_t card = box.cardinality();
  if (card * std::max<std::size_t>(primes.size(), 1) > budget)
    throw budget_error("box scan exceeds budget");
  std::string out = "c4,c3,c2,c1,c0,disc,degenerate";
  for (std::int64_t p : primes) out += ",p" + std::to_string(p);
  out += '\n';
  for (std::uint64_t idx = 0; idx < card; ++idx) {
    QuinticPoly f = box.at(idx);
    for (std::size_t i = 0; i < 5; ++i) {
      out += std::to_string(f.c[i]);
      out += ',';
    }
    out += discriminant(f).get_str();
    out += ',';
    out += is_degenerate(f) ? '1' : '0';
    for (std::int64_t p : primes) {
      out += ',';
      out += factorization_type(f, p).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace lambda2
