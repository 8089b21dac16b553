#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace zs {

inline unsigned resolveThreads(unsigned t) {
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return t;
}

/// Splits [0, count) into contiguous chunks, at most one per thread and none
/// smaller than `grain`. body(lo, hi) must only write to its own range.
template <typename F>
void parallelFor(std::size_t count, unsigned threads, std::size_t grain, F&& body) {
  threads = std::min<std::size_t>(resolveThreads(threads), std::max<std::size_t>(1, count / grain));
  if (threads <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace zs
