#pragma once

namespace fringe {

// Number of OpenMP threads a kernel should use: requested > 0 wins, otherwise
// the OpenMP default (1 when built without OpenMP). Parallel kernels write
// disjoint per-index slots only, so results are bit-identical for any value.
int resolve_threads(int requested);

}  // namespace fringe
