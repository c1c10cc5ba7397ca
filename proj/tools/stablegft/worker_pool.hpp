#pragma once

#include <cstdint>
#include <functional>

namespace stablegft::cli {

/// Number of worker threads to use for independent trials: the value of
/// STABLE_GFT_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
unsigned thread_cap();

/// Runs fn(0) ... fn(count - 1) on up to `threads` workers. Each call must
/// write its output into a caller-owned slot indexed by its argument, so the
/// result never depends on scheduling. The first exception thrown by any
/// call is rethrown on the calling thread after all workers finish.
void run_trials(std::int64_t count, unsigned threads,
                const std::function<void(std::int64_t)>& fn);

}  // namespace stablegft::cli
