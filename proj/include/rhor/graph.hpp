#pragma once

// Host graphs, replication profiles and colorings of replication graphs.
//
// A replication graph of a host H replaces every vertex i of H by a clique of
// `orders[i]` vertices and every edge ij by a complete join between the two
// cliques. Vertices of a replication graph are numbered clique by clique in
// host order, so vertex (clique i, member m) has index offset(i) + m.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace rhor {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..vertex_count-1.
class HostGraph {
 public:
  HostGraph() = default;
  explicit HostGraph(int vertex_count);
  HostGraph(int vertex_count, std::span<const Edge> edges);
  HostGraph(int vertex_count, std::initializer_list<Edge> edges);

  /// Throws DomainError on loops, duplicates or out-of-range endpoints.
  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Edges as (min, max) pairs in insertion order.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Subgraph induced by `vertices`, renumbered 0..k-1 in the given order.
  HostGraph induced(std::span<const int> vertices) const;

  /// Same vertex count and same edge set.
  friend bool operator==(const HostGraph& a, const HostGraph& b);

  static HostGraph path(int n);
  static HostGraph cycle(int n);
  static HostGraph complete(int n);
  static HostGraph anticlique(int n);

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

/// Orders of the replication cliques, one per host vertex. Every entry >= 1.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<int> orders);
  Profile(std::initializer_list<int> orders);

  int size() const { return static_cast<int>(orders_.size()); }
  bool empty() const { return orders_.empty(); }
  int operator[](int i) const { return orders_[i]; }
  const std::vector<int>& orders() const { return orders_; }
  auto begin() const { return orders_.begin(); }
  auto end() const { return orders_.end(); }

  /// Number of vertices of the replication graph.
  int64_t total() const;

  Profile reversed() const;
  /// Orders at the given positions, in the given order.
  Profile restricted(std::span<const int> positions) const;

  friend auto operator<=>(const Profile&, const Profile&) = default;
  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<int> orders_;
};

struct ReplicationVertex {
  int clique = 0;
  int member = 0;
  friend bool operator==(const ReplicationVertex&, const ReplicationVertex&) = default;
};

/// Maps (clique, member) addresses to deterministic vertex indices.
class ReplicationLayout {
 public:
  explicit ReplicationLayout(const Profile& p);

  int vertex_count() const { return offsets_.back(); }
  int clique_count() const { return static_cast<int>(offsets_.size()) - 1; }
  int offset(int clique) const { return offsets_[clique]; }
  int clique_size(int clique) const { return offsets_[clique + 1] - offsets_[clique]; }
  /// Throws DimensionError when out of range.
  int index(ReplicationVertex v) const;
  ReplicationVertex vertex(int index) const;

 private:
  std::vector<int> offsets_;
};

/// Colors of a replication graph's vertices in deterministic numbering.
struct ColoringAssignment {
  std::vector<int> colors;

  int size() const { return static_cast<int>(colors.size()); }
  int color(const ReplicationLayout& layout, ReplicationVertex v) const {
    return colors[layout.index(v)];
  }
};

/// Throws DimensionError when p does not match h.
HostGraph replicate(const HostGraph& h, const Profile& p);

/// Lexicographic minimum of p and its reverse.
Profile canonical_path_profile(const Profile& p);

/// Lexicographic minimum over rotations of p and of its reverse.
/// Throws DimensionError for fewer than three entries.
Profile canonical_cycle_profile(const Profile& p);

/// True iff no edge of g is monochromatic. Throws DimensionError for a
/// coloring of the wrong length and DomainError for negative colors.
bool validate_coloring(const HostGraph& g, const ColoringAssignment& c);

}  // namespace rhor
