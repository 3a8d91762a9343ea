// Directed-rounding style double enclosures.
//
// Floating point appears in this library only where values are genuinely
// irrational (Euler products, zeta values, geometric tails with fractional
// exponents).  Those are carried as [lo, hi] intervals: each inexact
// operation widens the result outward by a unit-in-the-last-place budget,
// inflated by 2x.  Exactness is never claimed for interval values; tests
// compare against the enclosure, not the midpoint.
#pragma once

#include <cmath>

namespace lambda2 {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  // [v - e, v + e] pushed one ulp outward.
  static Interval widen(double v, double abs_err);

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

// Outward-rounded arithmetic (operands may straddle zero unless noted).
Interval iadd(const Interval& a, const Interval& b);
Interval imul(const Interval& a, const Interval& b);
// Scale by an exact nonnegative double (e.g. a small rational's value).
Interval iscale(const Interval& a, double c);
// [exp(a.lo), exp(a.hi)] widened outward.
Interval iexp(const Interval& a);

}  // namespace lambda2
