#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace origami {

// Work is cut into fixed-size blocks independent of the thread count, and any
// cross-block combination is done by the caller in block order. Outputs are
// therefore bit-identical for every value of `threads`.
inline constexpr std::size_t kParallelBlock = 4096;

inline std::size_t block_count(std::size_t n, std::size_t block = kParallelBlock) {
  return (n + block - 1) / block;
}

// Runs fn(block_index, lo, hi) over [0, n) in blocks.  fn must only write to
// locations owned by its block.
inline void parallel_blocks(std::size_t n, unsigned threads,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                            std::size_t block = kParallelBlock) {
  const std::size_t nblocks = block_count(n, block);
  if (threads <= 1 || nblocks <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b)
      fn(b, b * block, std::min(n, (b + 1) * block));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      fn(b, b * block, std::min(n, (b + 1) * block));
    }
  };
  std::vector<std::thread> pool;
  unsigned use = std::min<unsigned>(threads, static_cast<unsigned>(nblocks));
  pool.reserve(use);
  for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace origami
