#pragma once

// Dense graphs of at most 64 vertices with one adjacency word per vertex.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "rhor/graph.hpp"

namespace rhor::detail {

using Mask = uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;

  /// Throws ResourceError above `cap` (or 64) vertices.
  static BitGraph from(const HostGraph& g, int cap);

  /// replicate(h[subset], p|subset) without materializing a HostGraph.
  /// Cliques are laid out in subset order.
  static BitGraph replication(const HostGraph& h, const Profile& p, std::span<const int> subset,
                              int cap);
};

/// Exact maximum clique size.
int max_clique(const BitGraph& g);

/// Optimal coloring; colors[v] in 0..k-1 where k is the chromatic number.
std::vector<int> optimal_coloring(const BitGraph& g);

/// Largest total weight of a clique inside `candidates` (host graph of at
/// most 64 vertices).
int max_weight_clique(std::span<const Mask> adj, std::span<const int> weight, Mask candidates);

}  // namespace rhor::detail
