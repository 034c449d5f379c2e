#pragma once

#include <cstddef>
#include <functional>

namespace pompeiu {

/// Runs `body(i)` for i in [0, n); implementations may run bodies
/// concurrently but must finish all of them before returning.
using ParallelFor = std::function<void(std::size_t n, const std::function<void(std::size_t)>& body)>;

void serial_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pompeiu
