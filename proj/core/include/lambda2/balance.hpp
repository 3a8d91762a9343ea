// Formal power-term bookkeeping and exact minimax exponent balancing.
//
// A PowerTerm is a monomial X^a * P^b * ... with exact rational exponents.
// Balancing substitutes P = X^theta for one designated parameter P and
// minimizes, over theta in a feasible interval, the maximum of the resulting
// affine X-exponents a_i + b_i * theta.  The optimum of a maximum of
// finitely many affine functions is attained at an endpoint or a pairwise
// intersection, so the minimizer is found exactly over that candidate set.
//
// Epsilon paddings (T^(3+eps) and the like) and log factors do not
// participate in balancing; they are carried as annotations only.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lambda2/rational.hpp"

namespace lambda2 {

struct PowerTerm {
  // parameter name -> exponent; absent parameter means exponent 0.
  std::map<std::string, Rat> exponents;
  // Annotations (do not participate in balancing): the term carries an
  // implicit epsilon in its exponent, and/or a log^k X factor.
  bool eps_padded = false;
  Rat log_power;

  Rat exponent_of(const std::string& name) const;
};

// Parses "X^39/40*T^3", "X*D^-1/2", "X^0", ... (exponent 1 when ^ absent).
PowerTerm parse_power_term(const std::string& text);
std::string power_term_str(const PowerTerm& t);

struct BalanceProblem {
  std::vector<PowerTerm> terms;
  std::string parameter;             // substituted as X^theta
  Rat theta_min;                     // feasible interval lower end (default 0)
  std::optional<Rat> theta_max;      // nullopt = unbounded above
};

struct BalanceResult {
  bool unbounded = false;  // max decreases forever (all slopes negative on an
                           // unbounded interval); theta/exponent unset
  Rat theta;               // minimizer (smallest in the argmin set)
  Rat exponent;            // achieved X-exponent, max over terms at theta
  std::vector<std::size_t> active;  // indices of binding terms
};

// X-exponent of term t after substituting parameter = X^theta: a + b*theta.
// Throws domain_error if t references a parameter other than "X" and
// `parameter`.
Rat substitute(const PowerTerm& t, const std::string& parameter,
               const Rat& theta);

// Exact minimizer of max_i substitute(terms[i], theta) over the interval.
// Throws domain_error on an empty term list, a stray parameter, or an empty
// interval.
BalanceResult balance(const BalanceProblem& p);

// a - delta/(2A+3): the power saving from balancing
// {X^a * D^(-1/2), X^(a-delta) * D^(A+1)} — the remainder sum
// sum_{d<D} tau3(d) d^A contributes the D^(A+1).  Throws domain_error unless
// delta > 0 and A >= 0.
Rat power_saving_exponent(const Rat& a, const Rat& delta, const Rat& A);

// Assembles the three-term field-count budget
//   { X * T^(-tail_u),  X^cutoff_e * T^3,  X^degenerate_e * T }
// and balances it over theta >= 0 (tail_u is the uniformity exponent of the
// tail X/T^u).  With (199/200, 39/40, 1) this returns (1/400, 399/400).
BalanceResult field_count_budget(const Rat& degenerate_e, const Rat& cutoff_e,
                                 const Rat& tail_u);

}  // namespace lambda2
