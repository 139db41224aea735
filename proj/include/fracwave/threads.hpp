#pragma once

#include <functional>

namespace fracwave {

/// Worker count: FRACWAVE_THREADS if set (>=1), else hardware concurrency.
int worker_count();

/// Run fn(i) for i in [0, n) on the worker pool. Blocks until done;
/// exceptions from tasks are rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace fracwave
