#pragma once

#include <cstddef>
#include <functional>

namespace berrut {

/// Worker count: BERRUT_LAB_THREADS caps it when set, otherwise the
/// hardware concurrency (at least 1).
int worker_count();

/// Runs fn(i) for i in [0, count) on up to worker_count() threads.
/// Callers own determinism: fn must write only to its own slot.
/// Exceptions thrown by fn are collected and the first one rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace berrut
