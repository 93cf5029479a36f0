#pragma once

#include <cstddef>
#include <functional>

namespace funksphere {

/// Worker count: hardware concurrency, capped by FUNKSPHERE_THREADS when set.
int worker_count();

/// Runs body(i) for i in [begin, end) on up to worker_count() threads.
/// Iterations must be independent.
void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end,
                  const std::function<void(std::ptrdiff_t)>& body);

}  // namespace funksphere
