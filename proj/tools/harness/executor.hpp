#pragma once

#include <cstddef>

#include "pompeiu/parallel.hpp"

namespace pompeiu::harness {

/// Environment variable that caps the worker count.
inline constexpr const char* kThreadsEnv = "POMPEIU_THREADS";

/// min(requested, POMPEIU_THREADS) with at least one worker; requested = 0
/// means the hardware concurrency.
std::size_t effective_threads(std::size_t requested);

/// Work-sharing loop over std::thread. Results are written by index, so the
/// outcome does not depend on the width. The first exception by index is
/// rethrown after all workers finish.
ParallelFor make_executor(std::size_t threads);

}  // namespace pompeiu::harness
