#ifndef HFL_PARALLEL_H_
#define HFL_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hfl {

// Splits [0, total) into `workers` contiguous chunks whose boundaries are
// multiples of `align`, and runs fn(chunk, begin, end) for each. Chunk
// indices follow range order, so callers merge per-chunk results in index
// order to get output independent of the worker count.
template <typename Fn>
void ParallelChunks(uint64_t total, int workers, uint64_t align, Fn&& fn) {
  workers = std::max(1, workers);
  uint64_t units = (total + align - 1) / align;
  uint64_t chunks = std::min<uint64_t>(workers, std::max<uint64_t>(units, 1));
  std::vector<uint64_t> bounds(chunks + 1, total);
  for (uint64_t c = 0; c < chunks; ++c) {
    bounds[c] = std::min(total, (units * c / chunks) * align);
  }
  if (chunks == 1) {
    fn(0, bounds[0], bounds[1]);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (uint64_t c = 0; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      try {
        fn(c, bounds[c], bounds[c + 1]);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline uint64_t ChunkCount(uint64_t total, int workers, uint64_t align) {
  uint64_t units = (total + align - 1) / align;
  return std::min<uint64_t>(std::max(1, workers), std::max<uint64_t>(units, 1));
}

}  // namespace hfl

#endif  // HFL_PARALLEL_H_
