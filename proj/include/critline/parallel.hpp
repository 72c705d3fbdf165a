#pragma once

#include <cstddef>
#include <functional>

namespace critline {

// Worker count: the HARDY_SIGN_THREADS environment variable when set to a
// positive integer, otherwise std::thread::hardware_concurrency().
int worker_thread_count();

// Runs fn(i) for every i in [0, n), splitting the index range into
// contiguous chunks across workers. Callers must write results into
// index-addressed slots so the output is identical for any thread count.
// The first exception thrown by any worker is rethrown after the join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace critline
