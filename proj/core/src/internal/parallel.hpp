#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace kdefect::internal {

// Runs f(i) for i in [0, count) across `workers` threads. Work is handed
// out dynamically; callers that need determinism must write results into
// per-index slots.
template <class F>
void parallel_for(std::size_t count, int workers, F&& f) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = static_cast<int>(std::min<std::size_t>(workers, count));
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
}

}  // namespace kdefect::internal
