#pragma once

#include <cstddef>
#include <functional>

namespace discode {

/// Worker count used by grid scans; 1 by default. Results never depend on it:
/// parallel_for only distributes independent indices and every reduction is
/// done afterwards in index order by the caller.
void set_thread_count(int n);
int thread_count();

/// Runs body(i) for i in [0, n). Exceptions from workers are rethrown (first by index).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace discode
