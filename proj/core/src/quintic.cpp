#include "lambda2/quintic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>

#include "lambda2/errors.hpp"
#include "lambda2/primes.hpp"

namespace lambda2 {

namespace detail {
std::array<Int, 6> eval_f20_resolvent(const std::array<Int, 5>& c);
}

// ───────────────────── polynomials over F_p ─────────────────────
// Coefficients ascending, trimmed; p < 2^62 with 128-bit products.
namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * b % p);
}

std::int64_t powmod_i(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  return powmod_i((a % p + p) % p, p - 2, p);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(out);
  return out;
}

// Remainder of a modulo b (b nonzero).
Poly pmod(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  std::int64_t inv = invmod(b.back(), p);
  while (degree(a) >= degree(b)) {
    std::int64_t q = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] - mulmod(q, b[i], p)) % p;
      if (a[shift + i] < 0) a[shift + i] += p;
    }
    trim(a);
  }
  return a;
}

Poly pgcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // make monic
    std::int64_t inv = invmod(a.back(), p);
    for (auto& x : a) x = mulmod(x, inv, p);
  }
  return a;
}

Poly pdiv_exact(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::int64_t inv = invmod(b.back(), p);
  while (degree(a) >= degree(b)) {
    std::int64_t coef = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    q[shift] = coef;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] - mulmod(coef, b[i], p)) % p;
      if (a[shift + i] < 0) a[shift + i] += p;
    }
    trim(a);
  }
  trim(q);
  return q;
}

// x^e mod f by square-and-multiply on residues.
Poly x_pow_mod(std::int64_t e, const Poly& f, std::int64_t p) {
  Poly base = pmod(Poly{0, 1}, f, p);
  Poly acc{1};
  while (e) {
    if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return acc;
}

Poly poly_pow_mod(Poly b, std::int64_t e, const Poly& f, std::int64_t p) {
  Poly acc{1};
  b = pmod(std::move(b), f, p);
  while (e) {
    if (e & 1) acc = pmod(pmul(acc, b, p), f, p);
    b = pmod(pmul(b, b, p), f, p);
    e >>= 1;
  }
  return acc;
}

Poly derivative(const Poly& a, std::int64_t p) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i)
    out.push_back(mulmod(static_cast<std::int64_t>(i % p), a[i], p));
  trim(out);
  return out;
}

Poly reduce_quintic(const QuinticPoly& f, std::int64_t p) {
  auto red = [p](long long v) {
    std::int64_t r = static_cast<std::int64_t>(v % p);
    return r < 0 ? r + p : r;
  };
  return Poly{red(f.c0()), red(f.c1()), red(f.c2()), red(f.c3()), red(f.c4()),
              1 % p};
}

// ───────────────────── exact integer linear algebra ─────────────────────

// Determinant by fraction-free Gaussian elimination (Bareiss).
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Resultant of a (degree da) and b (degree db), coefficients ascending,
// via the (da+db) Sylvester matrix.
Int resultant(const std::vector<Int>& a, int da, const std::vector<Int>& b,
              int db) {
  const int n = da + db;
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n),
                                  std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(da - k)];
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(db - k)];
  return bareiss_det(std::move(m));
}

// ───────────────────── integer root scanning ─────────────────────

// Fujiwara bound for a monic polynomial with coefficients `b` of
// X^(n-1), ..., X^0: scan radius 2 * max_k |b_{k}|^(1/k) + 1.
Int fujiwara_radius(const std::vector<Int>& nonleading) {
  Int best(0);
  const std::size_t n = nonleading.size();
  for (std::size_t k = 1; k <= n; ++k) {
    Int mag = abs(nonleading[k - 1]);
    if (k == n) mag = mag / 2 + 1;
    if (mag == 0) continue;
    Int root;
    mpz_root(root.get_mpz_t(), mag.get_mpz_t(), static_cast<unsigned long>(k));
    root += 1;
    if (root > best) best = root;
  }
  return 2 * best + 1;
}

// Integer roots of the monic polynomial X^n + c[0] X^(n-1) + ... + c[n-1]:
// scan [-B, B] with a Mersenne-modulus Horner filter, confirming hits
// exactly.  Throws budget_error if the radius exceeds `cap`.
bool has_integer_root(const std::vector<Int>& c, std::int64_t cap) {
  constexpr std::int64_t M = (1LL << 61) - 1;
  Int bound = fujiwara_radius(c);
  if (bound > cap)
    throw budget_error("integer-root scan radius exceeds budget");
  std::int64_t B = bound.get_si();
  std::vector<std::int64_t> cm(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Int r = c[i] % M;
    if (r < 0) r += M;
    cm[i] = r.get_si();
  }
  auto exact_hit = [&](std::int64_t r) {
    Int acc(1);
    for (const Int& ci : c) acc = acc * r + ci;
    return acc == 0;
  };
  for (std::int64_t r = -B; r <= B; ++r) {
    std::int64_t rm = r % M;
    if (rm < 0) rm += M;
    std::int64_t acc = 1;
    for (std::int64_t ci : cm) acc = (mulmod(acc, rm, M) + ci) % M;
    if (acc == 0 && exact_hit(r)) return true;
  }
  return false;
}

// ───────────────────── rational reducibility ─────────────────────

bool quintic_has_integer_root(const QuinticPoly& f) {
  if (f.c0() == 0) return true;
  std::vector<Int> c{int_of(f.c4()), int_of(f.c3()), int_of(f.c2()), int_of(f.c1()),
                     int_of(f.c0())};
  return has_integer_root(c, 100'000'000);
}

// Monic quadratic x^2 + bx + c times monic cubic: coefficient bounds from
// the Cauchy root bound R = 1 + max|c_i| (|b| <= 2R, |c| <= R^2) and the
// Mignotte-type factor bound 4 * ||f||_2, whichever is smaller per
// coefficient.
bool has_quadratic_factor(const QuinticPoly& f) {
  long long mx = 0;
  double norm2 = 1;
  for (long long ci : f.c) {
    mx = std::max(mx, std::llabs(ci));
    norm2 += static_cast<double>(ci) * static_cast<double>(ci);
  }
  long long R = 1 + mx;
  long long mignotte = static_cast<long long>(4 * std::sqrt(norm2)) + 1;
  long long b_bound = std::min(2 * R, mignotte);
  long long c_bound = std::min(R * R, mignotte);
  if (b_bound > 100'000 || c_bound > 100'000'000)
    throw budget_error("quadratic-factor search range exceeds budget");
  using I = __int128;
  const I c4 = f.c4(), c3 = f.c3(), c2 = f.c2(), c1 = f.c1(), c0 = f.c0();
  for (long long b = -b_bound; b <= b_bound; ++b) {
    for (long long c = -c_bound; c <= c_bound; ++c) {
      // (x^2 + bx + c)(x^3 + dx^2 + ex + g) matched to f
      I d = c4 - b;
      I e = c3 - c - b * d;
      I g = c2 - b * e - c * d;
      if (b * g + c * e == c1 && c * g == c0) return true;
    }
  }
  return false;
}

}  // namespace

// ───────────────────── public surface ─────────────────────

Int discriminant(const QuinticPoly& f) {
  // disc = (-1)^(5*4/2) Res(f, f') = Res(f, f') for monic quintics.
  std::vector<Int> a{int_of(f.c0()), int_of(f.c1()), int_of(f.c2()), int_of(f.c3()),
                     int_of(f.c4()), Int(1)};
  std::vector<Int> b{int_of(f.c1()), Int(2) * int_of(f.c2()), Int(3) * int_of(f.c3()),
                     Int(4) * int_of(f.c4()), Int(5)};
  return resultant(a, 5, b, 4);
}

std::string FactorizationType::str() const {
  if (ramified) return "R";
  std::string out;
  for (int d : degrees) out += std::to_string(d);
  return out;
}

FactorizationType factorization_type(const QuinticPoly& f, std::int64_t p) {
  if (p < 2 || p > (std::int64_t(1) << 56) || !is_prime(p))
    throw domain_error("factorization_type requires a prime p < 2^56");
  Poly fp = reduce_quintic(f, p);
  Poly fd = derivative(fp, p);
  if (degree(pgcd(fp, fd, p)) != 0) return {.ramified = true};

  FactorizationType t;
  // distinct-degree splitting: gcd with x^(p^k) - x collects the degree-k
  // irreducible factors (degree < k ones having been divided out).
  Poly rest = fp;
  Poly xp = x_pow_mod(p, rest, p);
  Poly g1 = xp;
  if (g1.empty()) g1 = Poly{0};
  // xp - x
  {
    Poly diff = g1;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    trim(diff);
    g1 = pgcd(rest, diff, p);
  }
  int d1 = degree(g1);
  for (int i = 0; i < d1; ++i) t.degrees.push_back(1);
  if (d1 > 0) rest = pdiv_exact(rest, g1, p);

  if (degree(rest) >= 2) {
    Poly xp2 = poly_pow_mod(x_pow_mod(p, rest, p), p, rest, p);
    Poly diff = xp2;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    trim(diff);
    Poly g2 = pgcd(rest, diff, p);
    int d2 = degree(g2);
    for (int i = 0; i < d2 / 2; ++i) t.degrees.push_back(2);
    if (d2 > 0) rest = pdiv_exact(rest, g2, p);
  }
  // whatever remains has all factors of degree >= 3 and total degree <= 5,
  // so it is a single irreducible factor.
  if (degree(rest) > 0) t.degrees.push_back(degree(rest));
  std::sort(t.degrees.begin(), t.degrees.end());
  return t;
}

FactorizationType factorization_type_bruteforce(const QuinticPoly& f,
                                                std::int64_t p) {
  if (p < 2 || p > 64 || !is_prime(p))
    throw domain_error("brute-force factorization is for small primes");
  Poly rest = reduce_quintic(f, p);
  std::vector<int> degrees;
  bool repeated = false;

  // Repeatedly strip the smallest-degree monic divisor; scanning degrees up
  // to half the remaining degree suffices (any proper factorization has a
  // part that small).
  while (degree(rest) > 0) {
    bool found = false;
    for (int deg = 1; !found && deg <= degree(rest) / 2; ++deg) {
      // all monic polynomials of this degree
      std::int64_t total = 1;
      for (int i = 0; i < deg; ++i) total *= p;
      for (std::int64_t code = 0; code < total && !found; ++code) {
        Poly cand(static_cast<std::size_t>(deg) + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < deg; ++i) {
          cand[static_cast<std::size_t>(i)] = c % p;
          c /= p;
        }
        cand[static_cast<std::size_t>(deg)] = 1;
        if (!pmod(rest, cand, p).empty()) continue;
        found = true;
        int mult = 0;
        while (pmod(rest, cand, p).empty()) {
          rest = pdiv_exact(rest, cand, p);
          ++mult;
        }
        if (mult > 1) repeated = true;
        for (int i = 0; i < mult; ++i) degrees.push_back(deg);
      }
    }
    if (!found) {  // remaining factor is irreducible
      degrees.push_back(degree(rest));
      break;
    }
  }
  if (repeated) return {.ramified = true};
  std::sort(degrees.begin(), degrees.end());
  return {.ramified = false, .degrees = degrees};
}

bool event_membership(const QuinticPoly& f, std::int64_t p, Family e) {
  FactorizationType t = factorization_type(f, p);
  if (t.ramified) return false;
  if (e == Family::five) return t.degrees == std::vector<int>{5};
  return t.degrees == std::vector<int>{1, 1, 1, 2};
}

Rat local_density(std::int64_t p, Family e) {
  if (p < 2 || !is_prime(p)) throw domain_error("local_density requires a prime");
  Int pz(p);
  Int p5 = pz * pz * pz * pz * pz;
  if (e == Family::five) return make_rat(p5 - pz, 5 * p5);
  return make_rat(pz * pz * (pz - 1) * (pz - 1) * (pz - 2), 12 * p5);
}

std::array<Int, 6> f20_resolvent(const QuinticPoly& f) {
  return detail::eval_f20_resolvent(
      {int_of(f.c4()), int_of(f.c3()), int_of(f.c2()), int_of(f.c1()), int_of(f.c0())});
}

bool sextic_has_integer_root(const std::array<Int, 6>& b) {
  return has_integer_root(std::vector<Int>(b.begin(), b.end()), 100'000'000);
}

namespace {

// disc of the monic sextic X^6 + b[0] X^5 + ... + b[5] (up to sign):
// zero iff the resolvent has a repeated root.
bool sextic_is_squarefree(const std::array<Int, 6>& b) {
  std::vector<Int> a{b[5], b[4], b[3], b[2], b[1], b[0], Int(1)};
  std::vector<Int> d{b[4],     Int(2) * b[3], Int(3) * b[2],
                     Int(4) * b[1], Int(5) * b[0], Int(6)};
  return resultant(a, 6, d, 5) != 0;
}

// f(x + s) for integer s, coefficients as big integers (c4..c0).
std::array<Int, 5> shifted_coeffs(const QuinticPoly& f, long long s) {
  // expand (x+s)^5 + c4 (x+s)^4 + ... + c0
  std::array<Int, 6> acc{};  // acc[i] = coefficient of x^i
  auto add_scaled_binomial = [&](const Int& coef, int deg) {
    Int binom(1);
    Int spow(1);
    for (int k = deg; k >= 0; --k) {
      // coefficient of x^k in (x+s)^deg is C(deg, k) s^(deg-k)
      acc[static_cast<std::size_t>(k)] += coef * binom * spow;
      binom = binom * k / (deg - k + 1);
      spow *= static_cast<long>(s);
    }
  };
  add_scaled_binomial(Int(1), 5);
  add_scaled_binomial(int_of(f.c4()), 4);
  add_scaled_binomial(int_of(f.c3()), 3);
  add_scaled_binomial(int_of(f.c2()), 2);
  add_scaled_binomial(int_of(f.c1()), 1);
  add_scaled_binomial(int_of(f.c0()), 0);
  return {acc[4], acc[3], acc[2], acc[1], acc[0]};
}

// Whether the Galois group of the irreducible quintic f lies in the
// order-20 Frobenius group: the sextic resolvent has a rational (hence
// integer) root.  A Tschirnhaus shift x -> x + s keeps the group and is
// applied until the resolvent is squarefree, so a repeated irrational pair
// cannot masquerade as a rational root.
bool solvable_by_resolvent(const QuinticPoly& f) {
  for (long long attempt = 0; attempt < 41; ++attempt) {
    long long s = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
    std::array<Int, 6> res = detail::eval_f20_resolvent(shifted_coeffs(f, s));
    if (!sextic_is_squarefree(res)) continue;
    return sextic_has_integer_root(res);
  }
  throw domain_error("resolvent stayed degenerate across 41 shifts");
}

}  // namespace

DegeneracyReason degeneracy_reason(const QuinticPoly& f) {
  Int disc = discriminant(f);
  if (disc == 0) return DegeneracyReason::zero_discriminant;
  if (quintic_has_integer_root(f) || has_quadratic_factor(f))
    return DegeneracyReason::reducible;
  if (disc > 0 && mpz_perfect_square_p(disc.get_mpz_t()))
    return DegeneracyReason::square_discriminant;
  if (solvable_by_resolvent(f)) return DegeneracyReason::solvable_galois;
  return DegeneracyReason::none;
}

bool is_degenerate(const QuinticPoly& f) {
  return degeneracy_reason(f) != DegeneracyReason::none;
}

}  // namespace lambda2
