#pragma once

namespace boolprod {

/// Worker threads for data-parallel kernels: BOOLPROD_THREADS when set to a
/// positive integer, else the hardware concurrency (at least 1). Read on every
/// call.
int worker_count();

}  // namespace boolprod
