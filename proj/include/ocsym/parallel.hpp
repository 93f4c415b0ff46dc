#pragma once

#include <cstddef>
#include <functional>

namespace ocsym {

/// Worker cap: OCSYM_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Iterations must touch disjoint state; the
/// caller sees the same result regardless of how work is split.
/// `grain` is the least number of iterations worth a worker of its own.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t grain = 1);

}  // namespace ocsym
