// Truncated inclusion-exclusion, Euler products, zeta enclosures, local
// over-ring factors, and the headline predictions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "lambda2/errors.hpp"
#include "lambda2/interval.hpp"
#include "lambda2/maximal.hpp"
#include "lambda2/primes.hpp"
#include "lambda2/rational.hpp"

using namespace lambda2;

namespace {

// Containment with a small slack for comparing against decimal literals
// (the literal itself is only correct to ~1 ulp).
bool near_contains(const Interval& iv, double v, double slack) {
  return iv.lo - slack <= v && v <= iv.hi + slack;
}

// Independent squarefree counter (trial division, desk scale).
std::int64_t squarefree_count_brute(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k) c += is_squarefree(k);
  return c;
}

// Exact squarefree count via full truncation: with T > sqrt(X) the engine's
// alternating sum has no tail at all.
Int squarefree_count_full_ie(std::int64_t x) {
  SquarefreeFamily fam;
  std::int64_t t = 2;
  while (t * t <= x) ++t;
  return rat_floor(truncated_ie(fam, Int(x), t).estimate);
}

Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace

// ───────────────────── the demo family ─────────────────────

TEST_CASE("squarefree family counts multiples of d squared") {
  SquarefreeFamily fam;
  CHECK(fam.W(1, Int(100)) == 100);
  CHECK(fam.W(2, Int(100)) == 25);
  CHECK(fam.W(3, Int(100)) == 11);
  CHECK(fam.W(10, Int(100)) == 1);
  CHECK(fam.W(11, Int(100)) == 0);
  CHECK(fam.c_p(2) == make_rat(1, 4));
  CHECK(fam.c_p(7) == make_rat(1, 49));
  CHECK(fam.tail_C() == 1);
  CHECK(fam.tail_eps() == 0);
  CHECK_THROWS_AS(fam.W(0, Int(100)), domain_error);
}

TEST_CASE("W shrinks under divisibility refinement") {
  SquarefreeFamily fam;
  const Int X(100'000);
  for (std::int64_t e : {1, 2, 3, 5, 6}) {
    for (std::int64_t d : {6, 30, 210}) {
      if (d % e != 0) continue;
      CHECK(fam.W(d, X) <= fam.W(e, X));
    }
  }
}

// ───────────────────── truncated inclusion-exclusion ─────────────────────

TEST_CASE("X = 100, T = 11 recovers the exact count 61 with tail 10") {
  SquarefreeFamily fam;
  IEResult r = truncated_ie(fam, Int(100), 11);
  // 100 - 25 - 11 - 4 + 2 - 2 + 1 over d = 1, 2, 3, 5, 6, 7, 10
  CHECK(r.estimate == Rat(61));
  CHECK(r.tail_bound == Rat(10));  // C X / (T - 1) with C = 1
  CHECK(squarefree_count_brute(100) == 61);
}

TEST_CASE("T = 2 returns the uncorrected total") {
  SquarefreeFamily fam;
  IEResult r = truncated_ie(fam, Int(12345), 2);
  CHECK(r.estimate == Rat(12345));
  CHECK(r.tail_bound == Rat(12345));
}

TEST_CASE("full truncation is exact; small counts match brute force") {
  CHECK(squarefree_count_full_ie(10) == 7);
  CHECK(squarefree_count_full_ie(100) == 61);
  CHECK(squarefree_count_full_ie(1'000) == squarefree_count_brute(1'000));
  CHECK(squarefree_count_full_ie(10'000) == squarefree_count_brute(10'000));
  // larger values against an independently computed reference
  CHECK(squarefree_count_full_ie(100'000) == 60794);
  CHECK(squarefree_count_full_ie(1'000'000) == 607926);
}

TEST_CASE("tail bound covers the truncation error across the grid") {
  SquarefreeFamily fam;
  for (std::int64_t x : {1'000LL, 10'000LL, 100'000LL, 1'000'000LL}) {
    Int exact = squarefree_count_full_ie(x);
    for (std::int64_t t : {3, 10, 30}) {
      IEResult r = truncated_ie(fam, Int(x), t);
      CHECK(abs_rat(r.estimate - Rat(exact)) <= r.tail_bound);
    }
  }
  // the documented instance of the bound: X = 10^6, T = 10 within 10^6/9
  IEResult r = truncated_ie(fam, Int(1'000'000), 10);
  CHECK(r.tail_bound == make_rat(1'000'000, 9));
  CHECK(abs_rat(r.estimate - Rat(607926)) <= r.tail_bound);
}

TEST_CASE("truncation below 2 is rejected") {
  SquarefreeFamily fam;
  CHECK_THROWS_WITH_AS(truncated_ie(fam, Int(10), 1),
                       "truncation T must be >= 2", domain_error);
}

TEST_CASE("positive tail epsilon produces a rounded-up rational bound") {
  // same counts as the squarefree family, but a deliberately lossy tail
  // model (C, eps) = (2, 1/2): bound = 2 X (T-1)^(-1/2) / (1/2).
  class Lossy : public SquarefreeFamily {
   public:
    Rat tail_C() const override { return Rat(2); }
    Rat tail_eps() const override { return make_rat(1, 2); }
  } fam;
  IEResult r = truncated_ie(fam, Int(100), 11);
  CHECK(r.estimate == Rat(61));
  // 4 * 100 / sqrt(10) = 126.49...; the stored rational must be an upper
  // bound and within a whisker of it
  double ideal = 4.0 * 100.0 / std::sqrt(10.0);
  CHECK(to_double(r.tail_bound) >= ideal);
  CHECK(to_double(r.tail_bound) <= ideal * (1 + 1e-12));
  CHECK(abs_rat(r.estimate - Rat(61)) <= r.tail_bound);

  class Bad : public SquarefreeFamily {
   public:
    Rat tail_eps() const override { return Rat(1); }
  } bad;
  CHECK_THROWS_AS(truncated_ie(bad, Int(100), 11), domain_error);
}

// ───────────────────── Euler products ─────────────────────

TEST_CASE("identically-one local factors give the exact point product") {
  EulerProductSpec spec;
  spec.local = [](std::int64_t) { return Rat(1); };
  spec.kappa = 0.0;
  Interval v = euler_product(spec, 1'000);
  CHECK(v.lo == 1.0);
  CHECK(v.hi == 1.0);
}

TEST_CASE("headline local factor evaluates to 37/32 at p = 2") {
  // 1 + p^-2 - p^-4 - p^-5 at p = 2
  Rat f2 = 1 + make_rat(1, 4) - make_rat(1, 16) - make_rat(1, 32);
  CHECK(f2 == make_rat(37, 32));
  // and the fourth-power-tail rewrite satisfies the defining identity
  // (1 - p^-2)(1 + p^-2 - p^-4 - p^-5) = 1 - 2p^-4 - p^-5 + p^-6 + p^-7
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    Rat ip = make_rat(1, p);
    Rat p2 = ip * ip, p4 = p2 * p2, p5 = p4 * ip, p6 = p5 * ip, p7 = p6 * ip;
    CHECK((1 - p2) * (1 + p2 - p4 - p5) == 1 - 2 * p4 - p5 + p6 + p7);
  }
}

TEST_CASE("product of (1 - p^-2) encloses the reciprocal of zeta(2)") {
  EulerProductSpec spec;
  spec.local = [](std::int64_t p) {
    return Rat(1 - make_rat(1, p) * make_rat(1, p));
  };
  spec.kappa = 2.0;
  spec.s = 2.0;
  Interval v = euler_product(spec, 100'000);
  CHECK(v.contains(6.0 / (M_PI * M_PI)));
  CHECK(v.width() <= 1e-3);

  // monotone refinement: the P = 10^3 enclosure contains the P = 10^4 one
  Interval coarse = euler_product(spec, 1'000);
  Interval fine = euler_product(spec, 10'000);
  CHECK(coarse.contains(fine));
  CHECK(coarse.contains(6.0 / (M_PI * M_PI)));
}

TEST_CASE("euler product input validation") {
  EulerProductSpec spec;
  spec.local = [](std::int64_t) { return Rat(1); };
  spec.s = 1.0;
  CHECK_THROWS_AS(euler_product(spec, 100), domain_error);
  spec.s = 2.0;
  CHECK_THROWS_AS(euler_product(spec, 1), domain_error);
  spec.local = [](std::int64_t) { return Rat(0); };
  CHECK_THROWS_AS(euler_product(spec, 100), domain_error);
  spec.local = [](std::int64_t) { return Rat(1); };
  spec.kappa = -1.0;
  CHECK_THROWS_AS(euler_product(spec, 100), domain_error);
}

// ───────────────────── zeta enclosures ─────────────────────

TEST_CASE("zeta enclosures hit the classical values") {
  Interval z2 = zeta_em(2), z3 = zeta_em(3), z4 = zeta_em(4), z5 = zeta_em(5);
  CHECK(near_contains(z2, M_PI * M_PI / 6.0, 1e-10));
  CHECK(near_contains(z4, std::pow(M_PI, 4) / 90.0, 1e-10));
  CHECK(near_contains(z3, 1.2020569031595942854, 1e-10));
  CHECK(near_contains(z5, 1.0369277551433699263, 1e-10));
  CHECK(z2.width() <= 1e-12);
  CHECK(z5.width() <= 1e-12);
  CHECK_THROWS_AS(zeta_em(1), domain_error);
  CHECK_THROWS_AS(zeta_em(0), domain_error);
}

TEST_CASE("zeta constant: n_i = 1/2 gives the plain zeta product") {
  Interval c = zeta_constant_c(make_rat(1, 2));
  // zeta(2)^2 zeta(3)^2 zeta(4)^2 zeta(5), independently evaluated
  CHECK(near_contains(c, 4.7490802205071894378, 1e-10));
  CHECK(c.width() <= 1e-10);

  // scaling in n_i: quadrupling n_i quarters the value
  Interval c2 = zeta_constant_c(Rat(2));
  CHECK(std::abs(4.0 * c2.mid() - c.mid()) <= 1e-9);

  CHECK_THROWS_AS(zeta_constant_c(Rat(0)), domain_error);
  CHECK_THROWS_AS(zeta_constant_c(Rat(-3)), domain_error);
}

// ───────────────────── the headline constant ─────────────────────

TEST_CASE("headline constant encloses the reference value and nests") {
  Interval coarse = headline_constant(1'000);
  Interval fine = headline_constant(100'000);
  // independently computed: prod_p (1 + p^-2 - p^-4 - p^-5)
  const double reference = 1.3816085588232232580;
  CHECK(near_contains(coarse, reference, 1e-10));
  CHECK(near_contains(fine, reference, 1e-10));
  CHECK(coarse.contains(fine));
  CHECK(fine.width() <= 1e-8);
  CHECK(coarse.width() <= 1e-6);

  // cross-route agreement: the direct product with its first-power tail
  // certificate must overlap the fourth-power-tail route
  EulerProductSpec direct;
  direct.local = [](std::int64_t p) {
    Rat ip = make_rat(1, p);
    Rat p2 = ip * ip, p4 = p2 * p2, p5 = p4 * ip;
    return Rat(1 + p2 - p4 - p5);
  };
  direct.kappa = 1.0;  // 0 < log f(p) <= log(1 + p^-2) <= p^-2
  direct.s = 2.0;
  Interval d = euler_product(direct, 10'000);
  Interval h = headline_constant(10'000);
  CHECK(std::max(d.lo, h.lo) <= std::min(d.hi, h.hi));
  CHECK(d.contains(reference));
}

// ───────────────────── Brakenhoff local factors ─────────────────────

TEST_CASE("exact terms: each of the first eleven is 1/p^2") {
  for (int k = 1; k <= 11; ++k) {
    CHECK(brakenhoff_term_exact(2, k) == make_rat(1, 4));
    CHECK(brakenhoff_term_exact(5, k) == make_rat(1, 25));
  }
  CHECK_THROWS_WITH_AS(brakenhoff_term_exact(2, 12),
                       "term is irrational for k > 11 (exponent -2k/11)",
                       domain_error);
  CHECK_THROWS_AS(brakenhoff_term_exact(2, 0), domain_error);
  CHECK_THROWS_AS(brakenhoff_term_exact(1, 1), domain_error);
}

TEST_CASE("local factor nests in K and encloses the reference at p = 2") {
  Interval k10 = brakenhoff_local_factor(2, 10);
  Interval k100 = brakenhoff_local_factor(2, 100);
  Interval k500 = brakenhoff_local_factor(2, 500);
  CHECK(k10.contains(k100));
  CHECK(k100.contains(k500));
  // partial sums increase with K
  CHECK(k10.lo <= k100.lo);
  CHECK(k100.lo <= k500.lo);
  // the first ten terms alone contribute 10/4
  CHECK(k500.lo > 2.5);
  CHECK(k10.hi > 2.5);
  // independently computed: 11/4 + r^12/(1-r) with r = 2^(-2/11)
  CHECK(near_contains(k500, 4.6113305439695304641, 1e-10));
  CHECK(k500.width() <= 1e-9);
}

TEST_CASE("p^2 times the factor follows the closed form 11 + 1/(p^(2/11)-1)") {
  // The k <= 11 terms contribute exactly 11/p^2 and the k >= 12 geometric
  // part contributes p^-2 * r/(1-r), so p^2 * factor = 11 + 1/(p^(2/11)-1).
  // In particular the factor behaves like 11/p^2 for large p, and p^2 times
  // it stays above 11 for every p (checked at p = 10^4 within 10^-3).
  for (std::int64_t p : {2LL, 3LL, 97LL, 10'000LL}) {
    Interval f = brakenhoff_local_factor(p, 300);
    double closed = 11.0 + 1.0 / (std::pow(static_cast<double>(p), 2.0 / 11.0) - 1.0);
    double scaled = static_cast<double>(p) * static_cast<double>(p) * f.mid();
    CHECK(std::abs(scaled - closed) <= 1e-3);
    CHECK(scaled > 11.0);
  }
}

TEST_CASE("p^2 times the factor is maximized at p = 2") {
  Interval f2 = brakenhoff_local_factor(2, 200);
  double at2 = 4.0 * f2.lo;
  for (std::int64_t p : primes_below(101)) {
    if (p == 2) continue;
    Interval f = brakenhoff_local_factor(p, 200);
    CHECK(static_cast<double>(p * p) * f.hi < at2);
  }
}

// ───────────────────── over-ring budgets ─────────────────────

TEST_CASE("budget at d = 1 is exactly the zeta(2) enclosure") {
  Interval b = overring_budget(1);
  Interval z2 = zeta_em(2);
  CHECK(b.lo == z2.lo);
  CHECK(b.hi == z2.hi);
}

TEST_CASE("budget is multiplicative over the prime factors") {
  Interval b6 = overring_budget(6, 200);
  Interval manual = imul(imul(zeta_em(2), brakenhoff_local_factor(2, 200)),
                         brakenhoff_local_factor(3, 200));
  CHECK(b6.lo == manual.lo);
  CHECK(b6.hi == manual.hi);

  Interval b2 = overring_budget(2, 200);
  Interval m2 = imul(zeta_em(2), brakenhoff_local_factor(2, 200));
  CHECK(b2.lo == m2.lo);
  CHECK(b2.hi == m2.hi);
}

TEST_CASE("d^2-normalized products stay below the per-prime suprema") {
  // p^2 * factor(p) is maximal at p = 2, so d^2 prod_{p|d} factor(p) is at
  // most (2^2 * factor(2))^omega(d).
  Interval f2 = brakenhoff_local_factor(2, 200);
  const double sup = 4.0 * f2.hi;
  for (std::int64_t d : {2LL, 3LL, 6LL, 30LL, 210LL, 2310LL}) {
    double lhs = static_cast<double>(d) * static_cast<double>(d);
    double cap = 1.0;
    for (std::int64_t p : prime_factors(d)) {
      lhs *= brakenhoff_local_factor(p, 200).hi;
      cap *= sup;
    }
    CHECK(lhs <= cap);
  }
}

TEST_CASE("budget input validation") {
  CHECK_THROWS_AS(overring_budget(0), domain_error);
  CHECK_THROWS_WITH_AS(overring_budget(4), "budget requires squarefree d",
                       domain_error);
}

// ───────────────────── predictions ─────────────────────

TEST_CASE("prediction densities are 1/240, 1/24, 1/16") {
  Prediction p0 = headline_prediction(0, Rat(1), 1'000);
  Prediction p1 = headline_prediction(1, Rat(1), 1'000);
  Prediction p2 = headline_prediction(2, Rat(1), 1'000);
  CHECK(p0.d_i == make_rat(1, 240));
  CHECK(p1.d_i == make_rat(1, 24));
  CHECK(p2.d_i == make_rat(1, 16));
  CHECK(p2.d_i / p1.d_i == make_rat(3, 2));
  CHECK(p1.d_i / p0.d_i == Rat(10));
  CHECK(p0.truncation_P == 1'000);
  CHECK_THROWS_AS(headline_prediction(3, Rat(1), 1'000), domain_error);
  CHECK_THROWS_AS(headline_prediction(-1, Rat(1), 1'000), domain_error);
}

TEST_CASE("prediction at X = 0 vanishes") {
  Prediction p = headline_prediction(0, Rat(0), 1'000);
  CHECK(std::abs(p.value.lo) <= 1e-300);
  CHECK(std::abs(p.value.hi) <= 1e-300);
}

TEST_CASE("prediction for the real-quintic count at X = 10^6") {
  Prediction p = headline_prediction(1, Rat(1'000'000), 100'000);
  // (1/24) * 1.38160855882322326 * 10^6, independently evaluated
  CHECK(near_contains(p.value, 57567.023284300969, 1e-3));
  CHECK(std::abs(p.value.mid() - 57567.023284300969) <= 1e-2);
  CHECK(p.value.width() <= 1.0);
  // the value scales exactly linearly in d_i and X: i = 2 is 3/2 of i = 1
  Prediction q = headline_prediction(2, Rat(1'000'000), 100'000);
  CHECK(std::abs(q.value.mid() / p.value.mid() - 1.5) <= 1e-9);
}

// ───────────────────── interval plumbing ─────────────────────

TEST_CASE("interval arithmetic rounds outward") {
  Interval a = Interval::point(1.0);
  Interval b = Interval::widen(2.0, 0.0);
  CHECK(b.lo < 2.0);
  CHECK(b.hi > 2.0);
  Interval s = iadd(a, b);
  CHECK(s.lo < 3.0);
  CHECK(s.hi > 3.0);
  Interval m = imul({-2.0, 3.0}, {-5.0, 7.0});
  CHECK(m.lo <= -14.0);  // (-2)*7 and 3*(-5) -> min is -15... corners checked
  CHECK(m.lo <= 3.0 * -5.0);
  CHECK(m.lo <= -2.0 * 7.0);
  CHECK(m.hi >= -2.0 * -5.0);
  CHECK(m.hi >= 3.0 * 7.0);
  Interval sc = iscale({1.0, 2.0}, 3.0);
  CHECK(sc.lo < 3.0);
  CHECK(sc.hi > 6.0);
  CHECK(iscale({1.0, 2.0}, 0.0).lo == 0.0);
  CHECK(iscale({1.0, 2.0}, 0.0).hi == 0.0);
  Interval e = iexp({0.0, 0.0});
  CHECK(e.lo <= 1.0);
  CHECK(e.hi >= 1.0);
  CHECK(iexp({-0.1, 0.1}).contains(1.0));
}
