#pragma once

// Deciding G ->R H for a replication graph G of H given by its profile.
//
// G ->R H holds iff for every set S of host vertices the chromatic number of
// the replication subgraph G[S] is at least |S|. A failing S is a witness:
// coloring G[S] optimally and extending greedily gives a proper coloring of
// G without a rainbow transversal. Conversely any proper coloring of a
// feasible G yields a rainbow transversal through a saturating matching
// between host vertices and colors.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rhor/graph.hpp"

namespace rhor {

struct Witness {
  std::vector<int> subset;  ///< sorted host vertices
  int achieved = 0;         ///< chromatic number of G[subset], < subset.size()
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool feasible = true;
  std::optional<Witness> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(std::vector<int> subset, int achieved) {
    return {false, Witness{std::move(subset), achieved}};
  }
};

struct RainbowAssignment {
  std::vector<ReplicationVertex> picks;  ///< picks[i] lies in clique i
  std::vector<int> colors;               ///< colors[i] is the color of picks[i]
};

enum class CheckMode { chromatic, clique };

// Paths -------------------------------------------------------------------

/// max over {p_i : i in s} and {p_i + p_{i+1} : i, i+1 in s}.
/// Throws DomainError for an empty or out-of-range subset.
int subset_value_path(const Profile& p, std::span<const int> subset);

/// O(n^2) time, O(n) memory. For each threshold t the largest subset whose
/// path value is at most t is found by a take/skip scan; the profile is
/// feasible iff that size never exceeds t.
Verdict check_path(const Profile& p);

// Cycles ------------------------------------------------------------------

/// Exact chromatic number of replicate(C_n, w), n >= 3.
/// Even n: largest adjacent pair sum. Odd n: branch and bound over covers by
/// independent sets of C_n.
int weighted_cycle_chromatic(const Profile& w);

/// max(largest adjacent pair sum, ceil(total / floor(n/2))). Always a lower
/// bound on weighted_cycle_chromatic.
int cycle_chromatic_lower_bound(const Profile& w);

/// Proper subsets induce disjoint paths and are checked by clique value; the
/// full set is checked against weighted_cycle_chromatic.
Verdict check_cycle(const Profile& p);

// General hosts -----------------------------------------------------------

inline constexpr int kDefaultVertexCap = 64;
inline constexpr int kDefaultHostCap = 22;

/// Exact chromatic number. Throws ResourceError above `vertex_cap` vertices
/// (the implementation supports at most 64).
int chromatic_number_exact(const HostGraph& g, int vertex_cap = kDefaultVertexCap);

/// A proper coloring with chromatic_number_exact(g) colors 0..k-1.
ColoringAssignment optimal_coloring(const HostGraph& g, int vertex_cap = kDefaultVertexCap);

/// Largest clique of g (exact).
int clique_number(const HostGraph& g, int vertex_cap = kDefaultVertexCap);

/// Maximum of sum(w_i) over cliques of h; the clique number of replicate(h, w).
int max_weight_clique(const HostGraph& h, const Profile& w);

/// Checks every nonempty subset S of host vertices, by size then
/// lexicographically, and returns the first with value(S) < |S|.
/// `clique` mode is valid only for perfect hosts (paths, even cycles, trees).
/// Throws ResourceError when h has more than `host_cap` vertices or a
/// replication subgraph exceeds `vertex_cap` in chromatic mode.
Verdict check_general(const HostGraph& h, const Profile& p, CheckMode mode,
                      int host_cap = kDefaultHostCap, int vertex_cap = kDefaultVertexCap);

// Colorings ---------------------------------------------------------------

/// Rainbow transversal from a saturating host-vertex/color matching.
/// Throws ValidationError for an improper coloring and NoRainbowError with a
/// deficient Hall set when no transversal exists.
RainbowAssignment extract_rainbow(const HostGraph& h, const Profile& p,
                                  const ColoringAssignment& c);

/// True iff `r` picks one vertex per clique, its colors match `c` and are
/// pairwise distinct.
bool is_rainbow_transversal(const Profile& p, const ColoringAssignment& c,
                            const RainbowAssignment& r);

/// Proper coloring of replicate(h, p) that uses fewer than |subset| colors
/// on the cliques of `subset`. Throws DomainError unless
/// chi(replicate(h[subset], p|subset)) < |subset|.
ColoringAssignment make_bad_coloring(const HostGraph& h, const Profile& p,
                                     std::span<const int> subset);

}  // namespace rhor
