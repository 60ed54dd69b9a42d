#pragma once

#include <cstdint>
#include <functional>

namespace spiralemb {

/// Worker cap: SPIRALEMB_THREADS when set (positive integer), else hardware
/// concurrency.
int worker_count();

/// Run fn(block) for block in [0, blocks). Blocks are fixed a priori, so the
/// partition (and any per-block result) is independent of the worker count;
/// callers merge per-block results in block order.
void parallel_blocks(int blocks, const std::function<void(int)>& fn);

}  // namespace spiralemb
