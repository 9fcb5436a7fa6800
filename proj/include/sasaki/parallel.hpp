#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace sasaki {

/// Runs fn(i) for i in [0, n). When parallel, indices are striped across
/// hardware threads; each index writes only its own output slot, so results
/// are identical to the sequential run.
template <typename Fn>
void parallel_for_index(std::size_t n, bool parallel, Fn&& fn) {
  if (!parallel || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(n, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace sasaki
