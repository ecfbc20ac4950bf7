#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace frameforge {

/// Worker count: hardware concurrency, capped by FRAME_FORGE_THREADS when set.
inline unsigned thread_budget() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("FRAME_FORGE_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return n;
}

/// Runs fn(begin, end) over disjoint chunks of [0, n) and returns the per-chunk
/// results in chunk order.  Reductions over the results must therefore be
/// order-independent or applied after this call; with first-occurrence argmax
/// inside each chunk, reducing in chunk order reproduces the serial answer for
/// any thread count.
template <typename Result, typename ChunkFn>
std::vector<Result> map_chunked(std::size_t n, ChunkFn fn, std::size_t min_chunk = 1024) {
  const unsigned budget = thread_budget();
  std::size_t chunks = budget;
  if (n < min_chunk * chunks) chunks = (n + min_chunk - 1) / min_chunk;
  if (chunks <= 1 || budget <= 1) {
    std::vector<Result> out;
    if (n > 0) out.push_back(fn(std::size_t{0}, n));
    return out;
  }
  std::vector<Result> out(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  const std::size_t per = (n + chunks - 1) / chunks;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * per;
    const std::size_t end = std::min(n, begin + per);
    pool.emplace_back([&, c, begin, end] { out[c] = fn(begin, end); });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace frameforge
