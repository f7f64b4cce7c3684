#pragma once

#include <cstddef>
#include <functional>

namespace hookbasis {

/// Number of workers used when a caller passes threads = 0.
unsigned default_thread_count();

/// Runs fn(i) for i in [0, count). Work is split into contiguous chunks;
/// callers own any output slots, so results are independent of the worker
/// count. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

} // namespace hookbasis
