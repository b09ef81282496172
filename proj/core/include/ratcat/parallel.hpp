#pragma once

#include <cstddef>
#include <functional>

namespace ratcat {

// Worker count: RCAT_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for i in [0, n), split into contiguous chunks across
// workers. body must be safe to run concurrently for distinct i. The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ratcat
