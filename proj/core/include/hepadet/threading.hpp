#pragma once

#include <cstdint>
#include <functional>

namespace hepadet {

// Worker count for internal data-parallel loops. Reads HEPADET_THREADS once;
// defaults to the hardware concurrency clamped to [1, 8].
int thread_count();

// Splits [0, n) into contiguous chunks, one per worker. Each index is
// processed by exactly one worker, so results are bitwise independent of
// the worker count as long as `fn` writes disjoint outputs per index range.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace hepadet
