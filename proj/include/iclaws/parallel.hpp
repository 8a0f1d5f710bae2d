#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace iclaws {

// Thread cap: ICLAWS_THREADS if set (>=1), otherwise machine parallelism.
inline int thread_count() {
  static const int n = [] {
    if (const char* env = std::getenv("ICLAWS_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }();
  return n;
}

// Runs fn(i) for i in [0, n). Work is pulled from a shared counter so uneven
// cells balance; results must be written to per-index slots by the caller,
// which keeps the output deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const int workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

}  // namespace iclaws
