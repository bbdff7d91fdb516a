#pragma once

#include <cstdint>
#include <limits>

namespace graflow {

using vertex_t = std::uint32_t;
using edge_t = std::uint32_t;
using weight_t = double;

// Sentinel for "no predecessor" (source and unreachable vertices).
inline constexpr vertex_t no_predecessor = std::numeric_limits<vertex_t>::max();

// Unreachable distance sentinel.
inline constexpr weight_t unreachable = std::numeric_limits<weight_t>::infinity();

}  // namespace graflow
