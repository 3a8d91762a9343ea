#include "lambda2/interval.hpp"

#include <algorithm>
#include <limits>

namespace lambda2 {

namespace {

// One outward step per rounding the operation may have performed, doubled.
double up2(double v) {
  v = std::nextafter(v, std::numeric_limits<double>::infinity());
  return std::nextafter(v, std::numeric_limits<double>::infinity());
}

double down2(double v) {
  v = std::nextafter(v, -std::numeric_limits<double>::infinity());
  return std::nextafter(v, -std::numeric_limits<double>::infinity());
}

}  // namespace

Interval Interval::widen(double v, double abs_err) {
  return {down2(v - abs_err), up2(v + abs_err)};
}

Interval iadd(const Interval& a, const Interval& b) {
  return {down2(a.lo + b.lo), up2(a.hi + b.hi)};
}

Interval imul(const Interval& a, const Interval& b) {
  const double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down2(*std::min_element(c, c + 4)), up2(*std::max_element(c, c + 4))};
}

Interval iscale(const Interval& a, double c) {
  if (c == 0.0) return {0.0, 0.0};
  if (c == 1.0) return a;
  return {down2(std::min(c * a.lo, c * a.hi)),
          up2(std::max(c * a.lo, c * a.hi))};
}

Interval iexp(const Interval& a) {
  return {down2(std::exp(a.lo)), up2(std::exp(a.hi))};
}

}  // namespace lambda2
