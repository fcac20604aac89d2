#pragma once

#include <cstddef>
#include <functional>

namespace svirlab {

// Worker count: SVIRLAB_THREADS if set and positive, else hardware concurrency (at least 1).
int thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace svirlab
