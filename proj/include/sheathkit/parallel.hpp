#pragma once

#include <cstddef>
#include <functional>

namespace sheathkit {

// Worker cap: SHEATHKIT_THREADS if set (>=1), else hardware concurrency.
int thread_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks, one per
// worker; results must be written to disjoint slots so the outcome does not
// depend on scheduling.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

} // namespace sheathkit
