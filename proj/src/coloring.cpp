#include <algorithm>
#include <string>

#include "bitgraph.hpp"
#include "rhor/errors.hpp"
#include "rhor/verifier.hpp"

namespace rhor {
namespace detail {
namespace {

void check_cap(int n, int cap) {
  const int limit = std::min(cap, 64);
  if (n > limit)
    throw ResourceError("graph has " + std::to_string(n) + " vertices, cap is " +
                        std::to_string(limit));
}

// Branch and bound with a greedy-coloring bound on the candidate set.
class CliqueSearch {
 public:
  explicit CliqueSearch(const BitGraph& g) : g_(g) {}

  int run() {
    Mask all = g_.n == 64 ? ~Mask{0} : bit(g_.n) - 1;
    if (g_.n == 0) return 0;
    expand(0, all);
    return best_;
  }

 private:
  void expand(int size, Mask candidates) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    int order[64];
    int color_of[64];
    int count = 0;
    Mask uncolored = candidates;
    for (int color = 1; uncolored; ++color) {
      Mask available = uncolored;
      while (available) {
        const int v = lowest(available);
        available &= ~bit(v) & ~g_.adj[v];
        uncolored &= ~bit(v);
        order[count] = v;
        color_of[count] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + color_of[i] <= best_) return;
      const int v = order[i];
      expand(size + 1, candidates & g_.adj[v]);
      candidates &= ~bit(v);
    }
  }

  const BitGraph& g_;
  int best_ = 0;
};

// DSATUR branch and bound, seeded with the greedy DSATUR coloring.
class ColoringSearch {
 public:
  explicit ColoringSearch(const BitGraph& g)
      : g_(g), colors_(g.n, -1), sat_(g.n, 0), counts_(g.n, std::vector<int>(64, 0)) {}

  std::vector<int> run() {
    if (g_.n == 0) return {};
    lower_ = max_clique(g_);
    greedy();
    if (best_ > lower_) {
      std::fill(colors_.begin(), colors_.end(), -1);
      std::fill(sat_.begin(), sat_.end(), 0);
      for (auto& row : counts_) std::fill(row.begin(), row.end(), 0);
      search(0, 0);
    }
    return best_colors_;
  }

 private:
  int pick() const {
    int chosen = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.n; ++v) {
      if (colors_[v] >= 0) continue;
      const int s = popcount(sat_[v]);
      if (s < best_sat) continue;
      int deg = 0;
      for (Mask m = g_.adj[v]; m; m &= m - 1)
        if (colors_[lowest(m)] < 0) ++deg;
      if (s > best_sat || deg > best_deg) {
        chosen = v;
        best_sat = s;
        best_deg = deg;
      }
    }
    return chosen;
  }

  void assign(int v, int c) {
    colors_[v] = c;
    for (Mask m = g_.adj[v]; m; m &= m - 1) {
      const int u = lowest(m);
      if (counts_[u][c]++ == 0) sat_[u] |= bit(c);
    }
  }

  void unassign(int v) {
    const int c = colors_[v];
    colors_[v] = -1;
    for (Mask m = g_.adj[v]; m; m &= m - 1) {
      const int u = lowest(m);
      if (--counts_[u][c] == 0) sat_[u] &= ~bit(c);
    }
  }

  void greedy() {
    int used = 0;
    for (int step = 0; step < g_.n; ++step) {
      const int v = pick();
      const int c = lowest(~sat_[v]);
      assign(v, c);
      used = std::max(used, c + 1);
    }
    best_ = used;
    best_colors_ = colors_;
  }

  void search(int colored, int used) {
    if (used >= best_) return;
    if (colored == g_.n) {
      best_ = used;
      best_colors_ = colors_;
      return;
    }
    const int v = pick();
    for (int c = 0; c < used; ++c) {
      if (sat_[v] & bit(c)) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (best_ == lower_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const BitGraph& g_;
  std::vector<int> colors_;
  std::vector<Mask> sat_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> best_colors_;
  int lower_ = 0;
  int best_ = 0;
};

}  // namespace

BitGraph BitGraph::from(const HostGraph& g, int cap) {
  check_cap(g.vertex_count(), cap);
  BitGraph out;
  out.n = g.vertex_count();
  out.adj.assign(out.n, 0);
  for (auto [u, v] : g.edges()) {
    out.adj[u] |= bit(v);
    out.adj[v] |= bit(u);
  }
  return out;
}

BitGraph BitGraph::replication(const HostGraph& h, const Profile& p, std::span<const int> subset,
                               int cap) {
  int total = 0;
  std::vector<int> offset;
  for (int v : subset) {
    offset.push_back(total);
    total += p[v];
  }
  check_cap(total, cap);
  BitGraph out;
  out.n = total;
  out.adj.assign(total, 0);
  const int k = static_cast<int>(subset.size());
  for (int i = 0; i < k; ++i) {
    Mask block_i = 0;
    for (int a = 0; a < p[subset[i]]; ++a) block_i |= bit(offset[i] + a);
    for (int a = 0; a < p[subset[i]]; ++a) out.adj[offset[i] + a] |= block_i & ~bit(offset[i] + a);
    for (int j = 0; j < k; ++j) {
      if (j == i || !h.adjacent(subset[i], subset[j])) continue;
      Mask block_j = 0;
      for (int b = 0; b < p[subset[j]]; ++b) block_j |= bit(offset[j] + b);
      for (int a = 0; a < p[subset[i]]; ++a) out.adj[offset[i] + a] |= block_j;
    }
  }
  return out;
}

int max_clique(const BitGraph& g) { return CliqueSearch(g).run(); }

std::vector<int> optimal_coloring(const BitGraph& g) { return ColoringSearch(g).run(); }

int max_weight_clique(std::span<const Mask> adj, std::span<const int> weight, Mask candidates) {
  int best = 0;
  auto expand = [&](auto& self, int current, Mask cand) -> void {
    if (cand == 0) {
      best = std::max(best, current);
      return;
    }
    int bound = current;
    for (Mask m = cand; m; m &= m - 1) bound += weight[lowest(m)];
    if (bound <= best) return;
    while (cand) {
      const int v = lowest(cand);
      self(self, current + weight[v], cand & adj[v]);
      cand &= ~bit(v);
      int rest = current;
      for (Mask m = cand; m; m &= m - 1) rest += weight[lowest(m)];
      if (rest <= best) return;
    }
  };
  expand(expand, 0, candidates);
  return best;
}

}  // namespace detail

int chromatic_number_exact(const HostGraph& g, int vertex_cap) {
  const auto colors = detail::optimal_coloring(detail::BitGraph::from(g, vertex_cap));
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

ColoringAssignment optimal_coloring(const HostGraph& g, int vertex_cap) {
  return {detail::optimal_coloring(detail::BitGraph::from(g, vertex_cap))};
}

int clique_number(const HostGraph& g, int vertex_cap) {
  return detail::max_clique(detail::BitGraph::from(g, vertex_cap));
}

int max_weight_clique(const HostGraph& h, const Profile& w) {
  if (w.size() != h.vertex_count())
    throw DimensionError("weight vector length " + std::to_string(w.size()) +
                         " does not match vertex count " + std::to_string(h.vertex_count()));
  const auto g = detail::BitGraph::from(h, 64);
  const detail::Mask all = g.n == 64 ? ~detail::Mask{0} : detail::bit(g.n) - 1;
  return detail::max_weight_clique(g.adj, w.orders(), all);
}

}  // namespace rhor
