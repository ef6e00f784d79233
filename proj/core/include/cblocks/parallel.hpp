#pragma once

#include <cstddef>
#include <functional>

namespace cblocks {

/// Worker cap: CBLOCKS_THREADS when set (≥ 1), else hardware concurrency.
unsigned worker_count();

/// Runs fn(0..count-1) across workers with a static block partition.
/// Callers get determinism by writing into index-addressed slots.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace cblocks
