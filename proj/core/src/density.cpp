#include "lambda2/density.hpp"

#include "lambda2/primes.hpp"

namespace lambda2 {

DensityFunction DensityFunction::constant(const Rat& v) {
  DensityFunction g;
  g.rule_ = [v](std::int64_t) { return v; };
  return g;
}

DensityFunction DensityFunction::inverse_prime() {
  DensityFunction g;
  g.rule_ = [](std::int64_t p) { return make_rat(1, p); };
  return g;
}

DensityFunction DensityFunction::from_table(std::map<std::int64_t, Rat> table,
                                            const Rat& default_value) {
  DensityFunction g;
  g.rule_ = [table = std::move(table), default_value](std::int64_t p) {
    auto it = table.find(p);
    return it == table.end() ? default_value : it->second;
  };
  return g;
}

DensityFunction DensityFunction::from_function(
    std::function<Rat(std::int64_t)> rule) {
  DensityFunction g;
  g.rule_ = std::move(rule);
  return g;
}

Rat DensityFunction::at_prime(std::int64_t p) const {
  if (!rule_) throw domain_error("uninitialized density");
  Rat v = rule_(p);
  if (v < 0) throw domain_error("density g(p) < 0 at p=" + std::to_string(p));
  if (v >= 1)
    throw domain_error("singular density g(p) >= 1 at p=" + std::to_string(p));
  return v;
}

Rat DensityFunction::at(std::int64_t d) const {
  if (d < 1) throw domain_error("density argument must be >= 1");
  Rat out(1);
  for (auto& [p, e] : factorize(d)) {
    if (e > 1)
      throw domain_error("density extension requires squarefree argument");
    out *= at_prime(p);
  }
  return out;
}

}  // namespace lambda2
