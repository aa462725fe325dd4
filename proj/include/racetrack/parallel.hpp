#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace racetrack {

/// Worker count: RACETRACK_THREADS when set, hardware concurrency otherwise.
inline unsigned thread_count() {
  if (const char* env = std::getenv("RACETRACK_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

/// Runs body(begin, end) over [0, n) split into contiguous chunks.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  unsigned workers = thread_count();
  if (workers <= 1 || n < 2048) {
    body(std::size_t{0}, n);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t b = w * chunk;
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace racetrack
