#pragma once

#include <cstddef>
#include <functional>

namespace cetaev {

/// Worker count: CETAEV_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
std::size_t thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads, in
/// contiguous blocks. body must only write to slot i of caller-owned
/// storage; the first exception thrown is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cetaev
