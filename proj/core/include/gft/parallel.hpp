#pragma once

#include <cstddef>
#include <functional>

namespace gft {

/// Worker count: GFT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for i in [0, n) on up to worker_count() threads. Results must
/// be written to per-index slots so the outcome does not depend on scheduling.
/// The first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gft
