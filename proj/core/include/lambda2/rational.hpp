// Exact arithmetic aliases and small helpers on top of GMP's C++ bindings.
//
// Everything quantitative in the sieve pipeline (densities, weights, the
// quadratic form, truncation tails with rational data) is carried as an
// exact rational; doubles appear only in interval enclosures and in model
// remainders that involve irrational powers.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <type_traits>

#include "lambda2/errors.hpp"

namespace lambda2 {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational from a numerator/denominator pair.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long long num, long long den) {
  return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

// Int from any built-in integer (gmpxx has no long long constructor; long
// is 64 bits on every platform this library targets).
template <typename T>
inline Int int_of(T v) {
  static_assert(std::is_integral_v<T>, "int_of takes a built-in integer");
  if constexpr (std::is_signed_v<T>)
    return Int(static_cast<long>(v));
  else
    return Int(static_cast<unsigned long>(v));
}

// Parses "a" or "a/b" with optional sign; used by the CLI and config files.
Rat parse_rat(const std::string& text);

// Canonical text form: "a" when the denominator is 1, else "a/b".
std::string rat_str(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q^e for integer e (e < 0 requires q != 0).
Rat rat_pow(const Rat& q, long e);

// Floor of a rational as an integer.
Int rat_floor(const Rat& q);

}  // namespace lambda2
