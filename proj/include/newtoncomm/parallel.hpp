#pragma once

#include <cstddef>
#include <functional>

namespace newtoncomm {

/// Worker cap: COMMUTANT_THREADS if set to a positive integer, otherwise the hardware count.
int thread_budget();

/// Runs body(i) for i in [0, n) on at most thread_budget() threads.
/// Exceptions from any task are rethrown (the first one, in index order).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace newtoncomm
