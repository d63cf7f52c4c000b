#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace pslab {

// Runs fn(block) for block = 0..n_blocks-1 on up to `workers` threads and
// returns the results indexed by block, so any merge done in block order is
// independent of the worker count.
template <typename T>
std::vector<T> run_blocks(std::size_t n_blocks, unsigned workers,
                          const std::function<T(std::size_t)>& fn) {
  std::vector<T> results(n_blocks);
  if (n_blocks == 0) return results;
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_blocks)));
  if (n_threads == 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) results[b] = fn(b);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t b = next.fetch_add(1);
        if (b >= n_blocks) return;
        results[b] = fn(b);
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace pslab
