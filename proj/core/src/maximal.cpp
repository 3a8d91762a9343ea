#include "lambda2/maximal.hpp"

#include <cmath>
#include <limits>

#include "lambda2/errors.hpp"
#include "lambda2/primes.hpp"

namespace lambda2 {

namespace {

double up1(double v) {
  return std::nextafter(v, std::numeric_limits<double>::infinity());
}

double down1(double v) {
  return std::nextafter(v, -std::numeric_limits<double>::infinity());
}

// Enclosure of an exact rational as a double interval (mpq -> double may
// round either way; two ulps outward are ample).
Interval enclose(const Rat& q) {
  double v = to_double(q);
  return Interval::widen(v, 0.0);
}

}  // namespace

// ───────────────────── truncated inclusion-exclusion ─────────────────────

IEResult truncated_ie(const IEFamily& fam, const Int& X, std::int64_t T) {
  if (T < 2) throw domain_error("truncation T must be >= 2");
  const Rat C = fam.tail_C();
  const Rat eps = fam.tail_eps();
  if (!(eps < 1)) throw domain_error("tail exponent must satisfy eps < 1");
  if (eps < 0) throw domain_error("tail exponent must satisfy eps >= 0");

  IEResult out;
  out.estimate = 0;
  for (std::int64_t d = 1; d < T; ++d) {
    if (!is_squarefree(d)) continue;
    out.estimate += Rat(mobius(d)) * Rat(fam.W(d, X));
  }

  // Discarded terms: sum_{d >= T} W(d, X) <= C X sum_{d >= T} d^(eps-2)
  //                <= C X integral_{T-1}^inf t^(eps-2) dt
  //                 = C X (T-1)^(eps-1) / (1-eps).
  const Rat base = C * Rat(X) / (1 - eps);
  if (eps == 0) {
    out.tail_bound = base / Rat(T - 1);
  } else {
    // (T-1)^(eps-1) is irrational; round the double factor upward and carry
    // it back exactly (double -> Rat conversion is exact).
    double f = std::pow(static_cast<double>(T - 1), to_double(eps) - 1.0);
    for (int i = 0; i < 8; ++i) f = up1(f);
    out.tail_bound = base * Rat(f);
  }
  return out;
}

Int SquarefreeFamily::W(std::int64_t d, const Int& X) const {
  if (d < 1) throw domain_error("W(d, X) requires d >= 1");
  Int q;
  Int dd = Int(d) * d;
  mpz_fdiv_q(q.get_mpz_t(), X.get_mpz_t(), dd.get_mpz_t());
  return q;
}

Rat SquarefreeFamily::c_p(std::int64_t p) const {
  return make_rat(1, static_cast<long long>(p) * p);
}

// ───────────────────── Euler products ─────────────────────

Interval euler_product(const EulerProductSpec& spec, std::int64_t P) {
  if (!(spec.s > 1.0)) throw domain_error("tail certificate requires s > 1");
  if (P < 2) throw domain_error("truncation P must be >= 2");
  if (spec.kappa < 0) throw domain_error("tail constant kappa must be >= 0");

  double prod = 1.0;
  std::uint64_t roundings = 0;
  for (std::int64_t p : primes_below(P + 1)) {
    Rat f = spec.local(p);
    if (!(f > 0)) throw domain_error("local factor must be positive at p=" +
                                     std::to_string(p));
    if (f == 1) continue;  // exact no-op: costs neither error nor a multiply
    prod *= to_double(f);
    roundings += 2;  // conversion + multiplication, half-ulp each, rounded up
  }
  // Relative float budget, inflated 2x.
  double abs_err =
      std::abs(prod) * static_cast<double>(2 * roundings) *
      std::numeric_limits<double>::epsilon();
  Interval partial = (roundings == 0) ? Interval{1.0, 1.0}
                                      : Interval::widen(prod, abs_err);

  if (spec.kappa == 0.0) return partial;

  // |log tail| <= kappa * sum_{p > P} p^-s <= kappa * P^(1-s)/(s-1).
  double t = spec.kappa * std::pow(static_cast<double>(P), 1.0 - spec.s) /
             (spec.s - 1.0);
  for (int i = 0; i < 8; ++i) t = up1(t);
  Interval tail = iexp({-t, t});
  return imul(partial, tail);
}

// ───────────────────── zeta values ─────────────────────

Interval zeta_em(int s) {
  if (s < 2) throw domain_error("zeta enclosure requires integer s >= 2");
  // Euler-Maclaurin at N with Bernoulli corrections B2, B4, B6, all exact
  // rationals since s and N are integers:
  //   zeta(s) = sum_{n<=N} n^-s + N^(1-s)/(s-1) - N^-s/2
  //           + sum_k B_{2k}/(2k)! * s(s+1)..(s+2k-2) * N^(1-s-2k) + R,
  // |R| <= |B8|/8! * s(s+1)..(s+6) * N^(-s-7)  (alternating-tail bound for
  // real s; doubled below for safety).
  const long N = 100;
  Rat sum(0);
  for (long n = 1; n <= N; ++n) sum += 1 / rat_pow(Rat(n), s);
  Rat Npow = rat_pow(Rat(N), s);  // N^s
  sum += Rat(N) / (Npow * (s - 1));   // N^(1-s)/(s-1)
  sum -= 1 / (2 * Npow);              // -N^-s/2

  auto rising = [&](int k) {  // s(s+1)...(s+k-1)
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= (s + i);
    return r;
  };
  Rat N2 = Rat(N) * N;
  Rat term = rising(1) / (12 * Npow * N);  // B2/2! = 1/12
  sum += term;
  term = -rising(3) / (720 * Npow * N * N2);  // B4/4! = -1/720
  sum += term;
  term = rising(5) / (30240 * Npow * N * N2 * N2);  // B6/6! = 1/30240
  sum += term;
  Rat rem = rising(7) / (1209600 * Npow * N * N2 * N2 * N2);  // |B8|/8!
  rem *= 2;

  double lo = to_double(sum - rem), hi = to_double(sum + rem);
  return {Interval::widen(lo, 0.0).lo, Interval::widen(hi, 0.0).hi};
}

Interval zeta_constant_c(const Rat& n_i) {
  if (!(n_i > 0)) throw domain_error("index n_i must be positive");
  Interval z2 = zeta_em(2), z3 = zeta_em(3), z4 = zeta_em(4), z5 = zeta_em(5);
  Interval prod = imul(imul(imul(z2, z2), imul(z3, z3)), imul(imul(z4, z4), z5));
  return imul(prod, enclose(1 / (2 * n_i)));
}

Interval headline_constant(std::int64_t P) {
  // prod_p (1 + p^-2 - p^-4 - p^-5)
  //   = zeta(2) * prod_p (1 - 2p^-4 - p^-5 + p^-6 + p^-7),
  // since (1 - p^-2)(1 + p^-2 - p^-4 - p^-5) = 1 - 2p^-4 - p^-5 + p^-6 + p^-7.
  // The right-hand local factor is 1 - O(p^-4), so |log f(p)| <= 3 p^-4 for
  // p >= 2 and the truncation tail decays like P^-3.
  EulerProductSpec spec;
  spec.local = [](std::int64_t p) {
    Rat ip = make_rat(1, p);
    Rat p4 = rat_pow(ip, 4), p5 = p4 * ip, p6 = p5 * ip, p7 = p6 * ip;
    return Rat(1 - 2 * p4 - p5 + p6 + p7);
  };
  spec.kappa = 3.0;
  spec.s = 4.0;
  return imul(zeta_em(2), euler_product(spec, P));
}

// ───────────────────── local over-ring factors ─────────────────────

Rat brakenhoff_term_exact(std::int64_t p, int k) {
  if (p < 2) throw domain_error("local factor requires p >= 2");
  if (k < 1) throw domain_error("term index k must be >= 1");
  if (k > 11)
    throw domain_error("term is irrational for k > 11 (exponent -2k/11)");
  // For k <= 11, min(2k-2, 20k/11) = 2k-2, so the term is p^(2k-2-2k) = p^-2.
  return make_rat(1, static_cast<long long>(p) * p);
}

Interval brakenhoff_local_factor(std::int64_t p, int K) {
  if (p < 2) throw domain_error("local factor requires p >= 2");
  if (K < 1) throw domain_error("truncation K must be >= 1");
  const long long psq = static_cast<long long>(p) * p;
  const int kx = std::min(K, 11);

  // Terms with k <= 11 have min(2k-2, 20k/11) = 2k-2, so each is exactly
  // p^-2; from k = 12 on the exponent is 20k/11 - 2k = -2k/11, an exactly
  // geometric series with ratio r = p^(-2/11).
  const Interval head = enclose(Rat(kx) * make_rat(1, psq));
  const Interval head11 = enclose(Rat(11) * make_rat(1, psq));

  const double rn = std::pow(static_cast<double>(p), -2.0 / 11.0);
  const double r_lo = rn * (1.0 - 1e-14);  // pow + exponent rounding: ~3 ulps,
  const double r_hi = rn * (1.0 + 1e-14);  // padded with a wide margin

  // Upper endpoint: the full limit 11/p^2 + r^12/(1 - r), i.e. the partial
  // sum through any K plus its exact geometric tail.  Evaluating one
  // K-independent formula makes enclosures at different truncations share
  // the same cap, so they nest by construction instead of relying on
  // per-term rounding cushions.
  double geo = std::pow(r_hi, 12) / ((1.0 - r_hi) * (1.0 - 1e-14));
  geo *= 1.0 + 1e-13;
  const double hi = up1(up1(head11.hi + geo));

  // Lower endpoint: the rounded-down partial sum through K.  The running
  // sum only grows as terms are appended, so it is nondecreasing in K and
  // the enclosures nest.  Past k ~ 620 every remaining term sits below the
  // sum's double resolution for all p >= 2, so the loop stops there.
  double lo = head.lo;
  if (K >= 12) {
    double s = 0.0;
    double t = std::pow(r_lo, 12) * (1.0 - 1e-13);
    for (int k = 12; k <= std::min(K, 620); ++k) {
      s += t;
      t *= r_lo;
    }
    s *= 1.0 - 1e-12;  // deflate past the ~600 half-ulp roundings above
    if (s > 0.0) lo = std::max(lo, down1(head11.lo + s));
  }
  return {lo, hi};
}

Interval overring_budget(std::int64_t d, int K) {
  if (d < 1) throw domain_error("budget requires d >= 1");
  if (!is_squarefree(d)) throw domain_error("budget requires squarefree d");
  Interval out = zeta_em(2);
  for (auto& [p, e] : factorize(d))
    out = imul(out, brakenhoff_local_factor(p, K));
  return out;
}

// ───────────────────── headline predictions ─────────────────────

Prediction headline_prediction(int i, const Rat& X, std::int64_t P) {
  if (i < 0 || i > 2)
    throw domain_error("prediction index must be 0, 1, or 2");
  Prediction out;
  out.d_i = (i == 0) ? make_rat(1, 240) : (i == 1) ? make_rat(1, 24)
                                                   : make_rat(1, 16);
  out.product = headline_constant(P);
  out.value = imul(imul(enclose(out.d_i), out.product), enclose(X));
  out.truncation_P = P;
  return out;
}

}  // namespace lambda2
