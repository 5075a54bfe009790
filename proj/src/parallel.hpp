#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace betti::detail {

// Runs fn(chunk, begin, end) over [0, total) in fixed chunks on up to `jobs`
// threads. Chunk boundaries do not depend on `jobs`, so callers that store
// per-chunk results and merge them in chunk order get identical output for
// any worker count. The first exception thrown by a worker is rethrown.
template <class Fn>
void parallel_chunks(std::uint64_t total, unsigned jobs, std::uint64_t chunk_size, Fn&& fn) {
  const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(chunks);
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

// The t-th subset of `domain`: bit k of t selects the k-th element.
inline std::uint64_t deposit_bits(std::uint64_t t, std::uint64_t domain) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = domain; rest && t; rest &= rest - 1, t >>= 1)
    if (t & 1) out |= rest & (~rest + 1);
  return out;
}

}  // namespace betti::detail
