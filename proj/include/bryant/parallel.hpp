#pragma once

#include <functional>

namespace bryant {

// Worker cap: hardware concurrency, reduced by the BRYANT_THREADS environment
// variable when set to a smaller positive integer.
int thread_budget();

// body(i) for i in [0, count), distributed over the thread budget.  Results
// indexed by i stay deterministic regardless of scheduling.  The first
// exception thrown by any body is rethrown after all workers join.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace bryant
