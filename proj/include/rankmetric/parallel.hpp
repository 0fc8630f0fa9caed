#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rankmetric {

inline unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks and runs fn(chunk, begin, end) on a
/// pool of threads. Chunk boundaries depend only on `total` and `chunks`, never on
/// the thread count, so per-chunk results merged in chunk order are reproducible.
template <typename Fn>
void parallel_chunks(std::size_t total, std::size_t chunks, unsigned threads, Fn&& fn) {
  if (total == 0) return;
  chunks = std::clamp<std::size_t>(chunks, 1, total);
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  auto bounds = [&](std::size_t c) { return total / chunks * c + std::min(c, total % chunks); };

  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < chunks; c += threads) fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace rankmetric
