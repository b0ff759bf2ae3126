#pragma once

#include <functional>

namespace scartest {

/**
 * Runs fn(0..n-1) across `threads` workers (0 = hardware concurrency).
 * Items must be independent; callers make results thread-count invariant by
 * writing into per-index slots. The first exception thrown by any item is
 * rethrown on the calling thread after all workers join.
 */
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace scartest
