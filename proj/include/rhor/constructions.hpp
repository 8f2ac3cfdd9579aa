#pragma once

// Explicit feasible profiles: the interleaved upper-bound construction for
// paths, the optimal double-star profile and the anticlique baseline.

#include <cstdint>

#include "rhor/graph.hpp"

namespace rhor {

/// Double star S(a,b): centers C and D joined by an edge, a leaves on C and
/// b leaves on D. Vertex numbering: A leaves 0..a-1, then C, then D, then B
/// leaves, so S(1,1) is numbered exactly as P_4.
struct DoubleStarSpec {
  int a = 1;
  int b = 1;

  /// Throws ParameterError unless 1 <= a <= b.
  DoubleStarSpec(int a, int b);

  int order() const { return a + b + 2; }
  /// Longest allowed run of consecutive B leaves, ceil(b / (a + 1)).
  int run_length() const { return (b + a) / (a + 1); }
  int center_c() const { return a; }
  int center_d() const { return a + 1; }
  int leaf_a(int i) const { return i; }
  int leaf_b(int i) const { return a + 2 + i; }
};

/// Round-robin interleave of four sequences whose lengths depend on n mod 4.
/// Throws DomainError for n < 1.
Profile path_ub_profile(int n);

/// Closed-form total of path_ub_profile(n), evaluated in exact rationals.
int64_t path_ub_value(int n);

HostGraph double_star_graph(const DoubleStarSpec& spec);
/// Leaf orders 1..a+b, starting with a run of B leaves; runs of B leaves are
/// at most run_length() and no two A leaves have consecutive orders.
/// C gets run_length() + 1, D gets 2.
Profile double_star_profile(const DoubleStarSpec& spec);
int64_t double_star_value(const DoubleStarSpec& spec);

/// (1, 2, ..., n) for the edgeless host.
Profile anticlique_profile(int n);

}  // namespace rhor
