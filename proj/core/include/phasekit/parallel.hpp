#pragma once

#include <functional>

namespace phasekit {

// Worker cap, from PHASEKIT_THREADS if set (values < 1 mean serial),
// otherwise hardware concurrency.
int thread_count();

// Runs fn(begin, end) on disjoint index ranges covering [0, n).
// Each index is processed by exactly one worker, so element-wise writes
// stay deterministic regardless of the thread count.
void parallel_for(int n, const std::function<void(int, int)>& fn);

}  // namespace phasekit
