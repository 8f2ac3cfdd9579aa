#include "rhor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rhor/errors.hpp"

namespace rhor {

HostGraph::HostGraph(int vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  adjacency_.resize(vertex_count);
}

HostGraph::HostGraph(int vertex_count, std::span<const Edge> edges) : HostGraph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

HostGraph::HostGraph(int vertex_count, std::initializer_list<Edge> edges)
    : HostGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

void HostGraph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (adjacent(u, v))
    throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  auto insert_sorted = [](std::vector<int>& list, int x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool HostGraph::adjacent(int u, int v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

HostGraph HostGraph::induced(std::span<const int> vertices) const {
  std::vector<int> position(vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= vertex_count()) throw DimensionError("induced: vertex out of range");
    if (position[v] >= 0) throw DomainError("induced: repeated vertex");
    position[v] = i;
  }
  HostGraph g(static_cast<int>(vertices.size()));
  for (auto [u, v] : edges_) {
    if (position[u] >= 0 && position[v] >= 0) g.add_edge(position[u], position[v]);
  }
  return g;
}

bool operator==(const HostGraph& a, const HostGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto ea = a.edges_;
  auto eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

HostGraph HostGraph::path(int n) {
  HostGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

HostGraph HostGraph::cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  HostGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

HostGraph HostGraph::complete(int n) {
  HostGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

HostGraph HostGraph::anticlique(int n) { return HostGraph(n); }

Profile::Profile(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int x : orders_)
    if (x < 1) throw DomainError("profile entries must be positive, got " + std::to_string(x));
}

Profile::Profile(std::initializer_list<int> orders) : Profile(std::vector<int>(orders)) {}

int64_t Profile::total() const {
  return std::accumulate(orders_.begin(), orders_.end(), int64_t{0});
}

Profile Profile::reversed() const {
  Profile r = *this;
  std::reverse(r.orders_.begin(), r.orders_.end());
  return r;
}

Profile Profile::restricted(std::span<const int> positions) const {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int i : positions) {
    if (i < 0 || i >= size()) throw DimensionError("profile position out of range");
    out.push_back(orders_[i]);
  }
  return Profile(std::move(out));
}

ReplicationLayout::ReplicationLayout(const Profile& p) {
  offsets_.reserve(p.size() + 1);
  offsets_.push_back(0);
  for (int x : p) offsets_.push_back(offsets_.back() + x);
}

int ReplicationLayout::index(ReplicationVertex v) const {
  if (v.clique < 0 || v.clique >= clique_count() || v.member < 0 ||
      v.member >= clique_size(v.clique))
    throw DimensionError("replication vertex out of range");
  return offsets_[v.clique] + v.member;
}

ReplicationVertex ReplicationLayout::vertex(int index) const {
  if (index < 0 || index >= vertex_count()) throw DimensionError("vertex index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const int clique = static_cast<int>(it - offsets_.begin()) - 1;
  return {clique, index - offsets_[clique]};
}

HostGraph replicate(const HostGraph& h, const Profile& p) {
  if (p.size() != h.vertex_count())
    throw DimensionError("profile length " + std::to_string(p.size()) +
                         " does not match vertex count " + std::to_string(h.vertex_count()));
  const ReplicationLayout layout(p);
  HostGraph g(layout.vertex_count());
  for (int i = 0; i < p.size(); ++i) {
    const int base = layout.offset(i);
    for (int a = 0; a < p[i]; ++a)
      for (int b = a + 1; b < p[i]; ++b) g.add_edge(base + a, base + b);
  }
  for (auto [u, v] : h.edges()) {
    for (int a = 0; a < p[u]; ++a)
      for (int b = 0; b < p[v]; ++b) g.add_edge(layout.offset(u) + a, layout.offset(v) + b);
  }
  return g;
}

Profile canonical_path_profile(const Profile& p) { return std::min(p, p.reversed()); }

Profile canonical_cycle_profile(const Profile& p) {
  const int n = p.size();
  if (n < 3) throw DimensionError("cycle profile needs at least 3 entries");
  std::vector<int> best = p.orders();
  std::vector<int> candidate(n);
  for (const auto& base : {p.orders(), p.reversed().orders()}) {
    for (int shift = 0; shift < n; ++shift) {
      for (int i = 0; i < n; ++i) candidate[i] = base[(i + shift) % n];
      if (candidate < best) best = candidate;
    }
  }
  return Profile(std::move(best));
}

bool validate_coloring(const HostGraph& g, const ColoringAssignment& c) {
  if (c.size() != g.vertex_count())
    throw DimensionError("coloring covers " + std::to_string(c.size()) + " of " +
                         std::to_string(g.vertex_count()) + " vertices");
  for (int x : c.colors)
    if (x < 0) throw DomainError("negative color id");
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

}  // namespace rhor
