#include "rhor/random_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rhor/errors.hpp"

namespace rhor {

ColoringAssignment random_proper_coloring(const HostGraph& h, const Profile& p, uint64_t seed,
                                          int extra_colors) {
  if (p.size() != h.vertex_count()) throw DimensionError("profile length does not match vertex count");
  const ReplicationLayout layout(p);
  int max_degree = 0;
  for (int i = 0; i < p.size(); ++i) {
    int degree = p[i] - 1;
    for (int j : h.neighbors(i)) degree += p[j];
    max_degree = std::max(max_degree, degree);
  }
  const int palette = max_degree + 1 + std::max(extra_colors, 0);

  std::mt19937_64 rng(seed);
  std::vector<int> order(layout.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  ColoringAssignment out{std::vector<int>(layout.vertex_count(), -1)};
  std::vector<char> blocked(palette);
  std::vector<int> free_colors;
  for (int index : order) {
    const int clique = layout.vertex(index).clique;
    std::fill(blocked.begin(), blocked.end(), 0);
    auto block_clique = [&](int c) {
      for (int m = 0; m < p[c]; ++m) {
        const int color = out.colors[layout.offset(c) + m];
        if (color >= 0) blocked[color] = 1;
      }
    };
    block_clique(clique);
    for (int j : h.neighbors(clique)) block_clique(j);
    free_colors.clear();
    for (int c = 0; c < palette; ++c)
      if (!blocked[c]) free_colors.push_back(c);
    std::uniform_int_distribution<size_t> pick(0, free_colors.size() - 1);
    out.colors[index] = free_colors[pick(rng)];
  }
  return out;
}

}  // namespace rhor
