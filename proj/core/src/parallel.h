// Internal helper: run body(lo, hi, worker) over a partition of [0, n).
// Results must be merged by the caller in worker order when order matters;
// all library uses merge by exact addition, so any partition is
// deterministic.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace lambda2::internal {

inline void run_partitioned(
    std::size_t n, int threads,
    const std::function<void(std::size_t, std::size_t, int)>& body) {
  int nt = std::max(1, threads);
  if (nt == 1 || n < 2) {
    body(0, n, 0);
    return;
  }
  nt = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(nt), n));
  std::vector<std::thread> pool;
  std::size_t chunk =
      (n + static_cast<std::size_t>(nt) - 1) / static_cast<std::size_t>(nt);
  for (int t = 0; t < nt; ++t) {
    std::size_t lo = static_cast<std::size_t>(t) * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi, t] { body(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace lambda2::internal
