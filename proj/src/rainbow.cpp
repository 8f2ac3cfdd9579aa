#include <algorithm>
#include <set>
#include <string>

#include "bitgraph.hpp"
#include "rhor/errors.hpp"
#include "rhor/verifier.hpp"

namespace rhor {
namespace {

void require_proper(const HostGraph& h, const Profile& p, const ColoringAssignment& c,
                    const ReplicationLayout& layout) {
  if (p.size() != h.vertex_count())
    throw DimensionError("profile length does not match vertex count");
  if (c.size() != layout.vertex_count())
    throw DimensionError("coloring covers " + std::to_string(c.size()) + " of " +
                         std::to_string(layout.vertex_count()) + " vertices");
  std::vector<std::set<int>> used(p.size());
  for (int i = 0; i < p.size(); ++i) {
    for (int m = 0; m < p[i]; ++m) {
      const int color = c.colors[layout.offset(i) + m];
      if (color < 0) throw ValidationError("negative color id");
      if (!used[i].insert(color).second)
        throw ValidationError("color " + std::to_string(color) + " repeated inside clique " +
                              std::to_string(i));
    }
  }
  for (auto [u, v] : h.edges()) {
    for (int color : used[u])
      if (used[v].count(color))
        throw ValidationError("color " + std::to_string(color) + " on both cliques " +
                              std::to_string(u) + " and " + std::to_string(v));
  }
}

// Augmenting-path bipartite matching between host vertices and colors.
class Matching {
 public:
  Matching(std::vector<std::vector<int>> options, int color_count)
      : options_(std::move(options)),
        color_owner_(color_count, -1),
        vertex_color_(options_.size(), -1) {}

  void run() {
    for (int v = 0; v < static_cast<int>(options_.size()); ++v) {
      visited_.assign(color_owner_.size(), 0);
      augment(v);
    }
  }

  int color_of(int v) const { return vertex_color_[v]; }

  // Host vertices reachable from `root` along alternating paths.
  std::vector<int> hall_set(int root, int* colors_reached) const {
    std::vector<char> seen_vertex(options_.size(), 0), seen_color(color_owner_.size(), 0);
    std::vector<int> stack{root};
    seen_vertex[root] = 1;
    int reached = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int c : options_[v]) {
        if (seen_color[c]) continue;
        seen_color[c] = 1;
        ++reached;
        const int owner = color_owner_[c];
        if (owner >= 0 && !seen_vertex[owner]) {
          seen_vertex[owner] = 1;
          stack.push_back(owner);
        }
      }
    }
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(options_.size()); ++v)
      if (seen_vertex[v]) out.push_back(v);
    *colors_reached = reached;
    return out;
  }

 private:
  bool augment(int v) {
    for (int c : options_[v]) {
      if (visited_[c]) continue;
      visited_[c] = 1;
      if (color_owner_[c] < 0 || augment(color_owner_[c])) {
        color_owner_[c] = v;
        vertex_color_[v] = c;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> options_;
  std::vector<int> color_owner_;
  std::vector<int> vertex_color_;
  std::vector<char> visited_;
};

}  // namespace

RainbowAssignment extract_rainbow(const HostGraph& h, const Profile& p,
                                  const ColoringAssignment& c) {
  const ReplicationLayout layout(p);
  require_proper(h, p, c, layout);

  std::vector<int> palette = c.colors;
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  auto compact = [&](int color) {
    return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), color) - palette.begin());
  };

  std::vector<std::vector<int>> options(p.size());
  for (int i = 0; i < p.size(); ++i) {
    for (int m = 0; m < p[i]; ++m) options[i].push_back(compact(c.colors[layout.offset(i) + m]));
    std::sort(options[i].begin(), options[i].end());
  }
  Matching matching(options, static_cast<int>(palette.size()));
  matching.run();

  RainbowAssignment out;
  for (int i = 0; i < p.size(); ++i) {
    if (matching.color_of(i) < 0) {
      int used = 0;
      auto hall = matching.hall_set(i, &used);
      std::string listed;
      for (int v : hall) listed += (listed.empty() ? "" : ",") + std::to_string(v);
      throw NoRainbowError("no rainbow transversal: cliques {" + listed + "} use only " +
                               std::to_string(used) + " colors",
                           std::move(hall), used);
    }
    const int color = palette[matching.color_of(i)];
    for (int m = 0; m < p[i]; ++m) {
      if (c.colors[layout.offset(i) + m] == color) {
        out.picks.push_back({i, m});
        out.colors.push_back(color);
        break;
      }
    }
  }
  return out;
}

bool is_rainbow_transversal(const Profile& p, const ColoringAssignment& c,
                            const RainbowAssignment& r) {
  const ReplicationLayout layout(p);
  if (static_cast<int>(r.picks.size()) != p.size() || r.colors.size() != r.picks.size())
    return false;
  if (c.size() != layout.vertex_count()) return false;
  std::set<int> distinct;
  for (int i = 0; i < p.size(); ++i) {
    const auto v = r.picks[i];
    if (v.clique != i || v.member < 0 || v.member >= p[i]) return false;
    if (c.colors[layout.offset(i) + v.member] != r.colors[i]) return false;
    if (!distinct.insert(r.colors[i]).second) return false;
  }
  return true;
}

ColoringAssignment make_bad_coloring(const HostGraph& h, const Profile& p,
                                     std::span<const int> subset) {
  if (p.size() != h.vertex_count())
    throw DimensionError("profile length does not match vertex count");
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.front() < 0 || sorted.back() >= p.size())
    throw DomainError("witness subset must be nonempty, distinct and in range");

  const auto induced = detail::BitGraph::replication(h, p, sorted, kDefaultVertexCap);
  const auto part = detail::optimal_coloring(induced);
  const int chi = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
  if (chi >= static_cast<int>(sorted.size()))
    throw DomainError("subset is not a witness: chromatic number " + std::to_string(chi) +
                      " >= " + std::to_string(sorted.size()));

  const ReplicationLayout layout(p);
  ColoringAssignment out{std::vector<int>(layout.vertex_count(), -1)};
  std::vector<std::vector<int>> used(p.size());
  int cursor = 0;
  for (int v : sorted) {
    for (int m = 0; m < p[v]; ++m) {
      out.colors[layout.offset(v) + m] = part[cursor++];
      used[v].push_back(part[cursor - 1]);
    }
  }
  std::vector<char> in_subset(p.size(), 0);
  for (int v : sorted) in_subset[v] = 1;
  for (int v = 0; v < p.size(); ++v) {
    if (in_subset[v]) continue;
    for (int m = 0; m < p[v]; ++m) {
      std::set<int> blocked(used[v].begin(), used[v].end());
      for (int u : h.neighbors(v)) blocked.insert(used[u].begin(), used[u].end());
      int color = 0;
      while (blocked.count(color)) ++color;
      out.colors[layout.offset(v) + m] = color;
      used[v].push_back(color);
    }
  }
  return out;
}

}  // namespace rhor
