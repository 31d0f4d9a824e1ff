#pragma once

#include <cstddef>

namespace kvcut {

/// Hard ceiling of the 64-bit mask kernels.
inline constexpr std::size_t kMaskKernelLimit = 64;

/// Default vertex limit for exhaustive routines: 24, or KVCUT_EXHAUSTIVE_LIMIT.
std::size_t default_exhaustive_limit();
/// Default edge limit for exhaustive edge-subset search: 24, or KVCUT_EDGE_LIMIT.
std::size_t default_edge_limit();

}  // namespace kvcut
