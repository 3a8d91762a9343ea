// Monic integer quintics: discriminants, factorization types mod p,
// degeneracy classification.
//
// A quintic is degenerate when it does not cut out an S5 quintic field:
// zero discriminant, reducible over Q, or irreducible with Galois group
// smaller than S5.  The classification is exact:
//   (i)   disc(f) = 0 check (resultant of f and f');
//   (ii)  reducibility: integer-root scan within the Fujiwara bound plus an
//         exhaustive monic (quadratic x cubic) factor search within root
//         bounds (coefficient bounds via Cauchy/Mignotte-type estimates);
//   (iii) irreducible with square discriminant: Galois group inside A5;
//   (iv)  irreducible with a rational root of the degree-20 subgroup's
//         sextic resolvent: solvable group (C5, D5, or F20).
// Everything else is S5.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lambda2/rational.hpp"

namespace lambda2 {

// Monic x^5 + c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0; c[0..4] = (c4,...,c0).
struct QuinticPoly {
  std::array<long long, 5> c{};

  long long c4() const { return c[0]; }
  long long c3() const { return c[1]; }
  long long c2() const { return c[2]; }
  long long c1() const { return c[3]; }
  long long c0() const { return c[4]; }
};

// Exact integer discriminant via the resultant of f and f'.
Int discriminant(const QuinticPoly& f);

// Multiset of degrees of the irreducible factors of f mod p, ascending
// (sums to 5), or ramified when p | disc(f) (equivalently, f mod p is not
// separable).
struct FactorizationType {
  bool ramified = false;
  std::vector<int> degrees;  // empty when ramified

  bool operator==(const FactorizationType&) const = default;
  // "R" when ramified, else concatenated sorted degrees, e.g. "1112", "5".
  std::string str() const;
};

// Distinct-degree splitting via gcd with x^(p^k) - x.  p prime, p < 2^31.
FactorizationType factorization_type(const QuinticPoly& f, std::int64_t p);

// Reference implementation for small p: exhaustive search for a smallest-
// degree monic divisor, repeated on the quotient.  Intended for p <= 7.
FactorizationType factorization_type_bruteforce(const QuinticPoly& f,
                                                std::int64_t p);

enum class Family { five, type1112 };

// FIVE: f mod p irreducible; TYPE1112: factor degrees {1,1,1,2}.  Ramified
// primes belong to neither event.
bool event_membership(const QuinticPoly& f, std::int64_t p, Family e);

// Exact density of the event among all p^5 monic quintics mod p:
//   FIVE     -> (p^5 - p) / (5 p^5)
//   TYPE1112 -> p^2 (p-1)^2 (p-2) / (12 p^5)
Rat local_density(std::int64_t p, Family e);

enum class DegeneracyReason {
  none,               // irreducible with Galois group S5
  zero_discriminant,  // repeated root
  reducible,          // proper factor over Q
  square_discriminant,  // irreducible, group inside A5
  solvable_galois,    // irreducible, group C5/D5/F20 (resolvent root)
};

DegeneracyReason degeneracy_reason(const QuinticPoly& f);
bool is_degenerate(const QuinticPoly& f);

// Non-leading coefficients [X^5, ..., X^0] of the monic sextic resolvent
// whose rational roots detect Galois groups inside the order-20 Frobenius
// group.  Exposed for validation.
std::array<Int, 6> f20_resolvent(const QuinticPoly& f);

// True when the monic sextic X^6 + b[0] X^5 + ... + b[5] has an integer
// root (= rational root, by monicity).  Fujiwara-bounded exact scan.
bool sextic_has_integer_root(const std::array<Int, 6>& b);

}  // namespace lambda2
