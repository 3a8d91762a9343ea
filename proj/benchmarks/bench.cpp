// Microbenchmarks for the hot paths: weight construction with the exact
// quadratic form, factorization-type throughput, truncated
// inclusion-exclusion, and the local-factor enclosure.
#include <benchmark/benchmark.h>

#include <cstdint>

#include "lambda2/density.hpp"
#include "lambda2/maximal.hpp"
#include "lambda2/quintic.hpp"
#include "lambda2/sieve.hpp"

using namespace lambda2;

static void BM_weights_and_form(benchmark::State& state) {
  auto g = DensityFunction::inverse_prime();
  auto plan = SievePlan::build(g, 20, Rat(400));
  for (auto _ : state) {
    auto w = selberg_weights(g, plan);
    Rat form = quadratic_form(g, w);
    benchmark::DoNotOptimize(form);
  }
}
BENCHMARK(BM_weights_and_form);

static void BM_factorization_type(benchmark::State& state) {
  const std::int64_t p = static_cast<std::int64_t>(state.range(0));
  std::int64_t types = 0;
  for (auto _ : state) {
    for (long long c0 = -10; c0 <= 10; ++c0) {
      QuinticPoly f{{0, 0, 1, -1, c0}};
      types += factorization_type(f, p).degrees.size();
    }
  }
  benchmark::DoNotOptimize(types);
  state.SetItemsProcessed(state.iterations() * 21);
}
BENCHMARK(BM_factorization_type)->Arg(3)->Arg(101)->Arg(1'000'003);

static void BM_truncated_ie(benchmark::State& state) {
  SquarefreeFamily fam;
  const Int X(1'000'000);
  for (auto _ : state) {
    IEResult r = truncated_ie(fam, X, 30);
    benchmark::DoNotOptimize(r.estimate);
  }
}
BENCHMARK(BM_truncated_ie);

static void BM_brakenhoff_factor(benchmark::State& state) {
  for (auto _ : state) {
    Interval v = brakenhoff_local_factor(2, 500);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_brakenhoff_factor);

BENCHMARK_MAIN();
