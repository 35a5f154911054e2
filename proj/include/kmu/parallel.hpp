#pragma once

#include <cstddef>
#include <functional>

namespace kmu {

/// Worker count: KMU_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Each index is handled by exactly one worker,
/// so bodies writing to disjoint slots produce thread-count independent results.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace kmu
