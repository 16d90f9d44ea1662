#pragma once

#include <cstddef>
#include <functional>

namespace smallcancel {

/// Worker count from SMALLCANCEL_THREADS (0 or unset = hardware concurrency).
unsigned thread_count();

/// Runs body(i) for i in [0, n). Bodies must only write to slots indexed by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace smallcancel
