#pragma once

#include <cstddef>
#include <functional>

namespace koszul {

// Runs fn(0), ..., fn(count-1) across up to `jobs` worker threads.  Callers
// shard results into per-index slots so output order stays canonical no
// matter the job count.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace koszul
