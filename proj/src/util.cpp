#include "ydforge/util.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace ydforge {

int default_thread_count() {
  if (const char* env = std::getenv("YDFORGE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 4u));
}

std::vector<InstanceResult> parallel_map(
    size_t count, const std::function<InstanceResult(size_t)>& fn, int threads) {
  if (threads <= 0) threads = default_thread_count();
  std::vector<InstanceResult> results(count);
  if (count == 0) return results;
  if (threads == 1 || count == 1) {
    for (size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= count) return;
      results[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  const size_t nthreads = std::min<size_t>(static_cast<size_t>(threads), count);
  for (size_t t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace ydforge
