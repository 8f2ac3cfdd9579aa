#pragma once

#include <cstdint>

#include "rhor/graph.hpp"

namespace rhor {

inline constexpr uint64_t kDefaultSeed = 20240611;

/// Proper coloring of replicate(h, p): vertices in random order, each takes a
/// uniformly random color among those in [0, max_degree + 1 + extra_colors)
/// not already used by a neighbor.
ColoringAssignment random_proper_coloring(const HostGraph& h, const Profile& p, uint64_t seed,
                                          int extra_colors = 2);

}  // namespace rhor
