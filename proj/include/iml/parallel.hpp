#pragma once

#include <cstddef>
#include <functional>

namespace iml {

/// Worker count: IML_THREADS if set to a positive integer, otherwise hardware concurrency.
unsigned worker_count();

/// Runs fn(0..n-1) on up to `workers` threads. Each index writes its own result slot, so
/// outputs do not depend on the worker count. The exception of the lowest failing index is
/// rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned workers = worker_count());

}  // namespace iml
