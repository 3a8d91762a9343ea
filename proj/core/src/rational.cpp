#include "lambda2/rational.hpp"

#include <cctype>

namespace lambda2 {

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw domain_error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat q{Int(s)};
      return q;
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty())
      throw domain_error("malformed rational literal: " + text);
    return make_rat(Int(num), Int(den));
  } catch (const std::invalid_argument&) {
    throw domain_error("malformed rational literal: " + text);
  }
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  bool invert = e < 0;
  unsigned long mag = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                             : static_cast<unsigned long>(e);
  if (invert && q == 0) throw domain_error("0 raised to a negative power");
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), mag);
  return invert ? make_rat(den, num) : make_rat(num, den);
}

Int rat_floor(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

}  // namespace lambda2
