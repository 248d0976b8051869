// Deterministic fan-out over independent work items.
#ifndef LOGSYM_PARALLEL_HPP
#define LOGSYM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace logsym {

/// Worker count from LOGSYM_WORKERS, else the hardware concurrency (>= 1).
int worker_count();

/// Calls body(i) for every i in [0, count). Items may run concurrently; each
/// body writes only its own slot. If any body throws, the exception of the
/// lowest failing index is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace logsym

#endif
