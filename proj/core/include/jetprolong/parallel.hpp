#ifndef JETPROLONG_PARALLEL_HPP
#define JETPROLONG_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace jetprolong
{

// Runs body(0..count-1) on up to `jobs` threads. Work is handed out by an atomic counter, so
// callers that write into per-index slots get results independent of the thread count.
// The first exception thrown by any body is rethrown after all threads join.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)> &body);

// Value of JETPROLONG_JOBS when set to a positive integer, else 1.
unsigned default_jobs();

} // namespace jetprolong

#endif
