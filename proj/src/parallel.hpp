#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace kherd::detail {

// Runs fn(begin, end) on contiguous chunks of [0, count). Each output element
// must be written by exactly one chunk so the result is independent of the
// thread count. Falls back to a single inline call for small workloads.
template <typename Fn>
void parallel_chunks(std::ptrdiff_t count, int threads, Fn&& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::ptrdiff_t want = threads > 0 ? threads : static_cast<std::ptrdiff_t>(hw);
  want = std::min<std::ptrdiff_t>(want, count);
  if (want <= 1 || count < 256) {
    fn(std::ptrdiff_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(want));
  const std::ptrdiff_t chunk = (count + want - 1) / want;
  for (std::ptrdiff_t t = 0; t < want; ++t) {
    const std::ptrdiff_t begin = t * chunk;
    const std::ptrdiff_t end = std::min(begin + chunk, count);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace kherd::detail
