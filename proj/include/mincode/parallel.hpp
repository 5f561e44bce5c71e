#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace mincode {

// Process-wide worker count for the embarrassingly parallel scans
// (hyperplane loops, weight enumeration). 0 means "all cores".
// Results never depend on this value: ranges are split into contiguous
// blocks and block results are merged in index order.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(block_index, begin, end) on a partition of [0, total) into
// contiguous blocks, one per worker. Blocks are merged by the caller in
// block_index order, so reductions stay deterministic.
void parallel_blocks(std::size_t total,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

} // namespace mincode
