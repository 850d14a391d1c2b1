#pragma once

#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace ydforge {

/// Worker count: YDFORGE_THREADS when set, otherwise a small multiple of
/// the hardware, never zero.
int default_thread_count();

/// One slot per index, so aggregation order never depends on scheduling.
struct InstanceResult {
  bool ok = true;
  std::string witness;
};

std::vector<InstanceResult> parallel_map(
    size_t count, const std::function<InstanceResult(size_t)>& fn, int threads = 0);

}  // namespace ydforge
