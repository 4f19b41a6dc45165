#pragma once

#include <cstddef>
#include <functional>

namespace reach2 {

// Worker cap for internal parallel loops. Initialised from REACH2_THREADS
// (0 or unset = hardware concurrency). Results never depend on this value.
std::size_t max_threads();
void set_max_threads(std::size_t threads);

// Runs body(i) for i in [0, count), split into contiguous chunks over at most
// max_threads() threads. Exceptions from any chunk are rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace reach2
