#include "rhor/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bitgraph.hpp"
#include "rhor/errors.hpp"

namespace rhor {
namespace {

constexpr int kNone = -1000000;

// Largest subset of a path with all members <= t and all chosen adjacent
// pairs summing to <= t. Suffix take/skip tables, then a forward pass that
// prefers taking, so `chosen` is the lexicographically first largest subset.
int largest_bounded_subset(std::span<const int> values, int t, std::vector<int>* chosen) {
  const int n = static_cast<int>(values.size());
  std::vector<int> skip(n + 1, 0), take(n + 1, kNone);
  for (int i = n - 1; i >= 0; --i) {
    skip[i] = std::max(skip[i + 1], take[i + 1]);
    if (values[i] <= t) {
      int rest = skip[i + 1];
      if (i + 1 < n && values[i] + values[i + 1] <= t) rest = std::max(rest, take[i + 1]);
      take[i] = 1 + rest;
    }
  }
  const int best = std::max(skip[0], take[0]);
  if (chosen) {
    chosen->clear();
    int need = best;
    bool previous_taken = false;
    for (int i = 0; i < n && need > 0; ++i) {
      const bool allowed = values[i] <= t && take[i] >= need &&
                           (!previous_taken || values[i - 1] + values[i] <= t);
      if (allowed) {
        chosen->push_back(i);
        --need;
      }
      previous_taken = allowed;
    }
  }
  return best;
}

int cyclic_subset_value(const Profile& p, std::span<const int> subset) {
  const int n = p.size();
  std::vector<char> in(n, 0);
  for (int i : subset) in[i] = 1;
  int value = 0;
  for (int i = 0; i < n; ++i) {
    if (!in[i]) continue;
    value = std::max(value, p[i]);
    const int next = (i + 1) % n;
    if (in[next] && next != i) value = std::max(value, p[i] + p[next]);
  }
  return value;
}

int max_adjacent_pair(const Profile& w) {
  int best = 0;
  const int n = w.size();
  for (int i = 0; i < n; ++i) best = std::max(best, w[i] + w[(i + 1) % n]);
  return best;
}

// Decides whether an odd cycle with the given demands can be covered by k
// independent sets. Color classes are taken maximal within the vertices
// that still have demand and always contain the vertex of largest demand.
class OddCycleCover {
 public:
  explicit OddCycleCover(int n) : n_(n), half_(n / 2) {}

  bool coverable(std::vector<int>& demand, int k) {
    int total = 0, top = 0, pair = 0;
    for (int i = 0; i < n_; ++i) {
      total += demand[i];
      top = std::max(top, demand[i]);
      if (demand[i] > 0 && demand[(i + 1) % n_] > 0)
        pair = std::max(pair, demand[i] + demand[(i + 1) % n_]);
    }
    if (total == 0) return true;
    const int lower = std::max({top, pair, (total + half_ - 1) / half_});
    if (lower > k) return false;
    auto memo = failed_.find(demand);
    if (memo != failed_.end() && memo->second >= k) return false;

    int pivot = 0;
    for (int i = 1; i < n_; ++i)
      if (demand[i] > demand[pivot]) pivot = i;
    std::vector<std::vector<int>> classes;
    std::vector<int> current{pivot};
    enumerate_classes(demand, pivot, 1, current, classes);
    for (const auto& cls : classes) {
      for (int v : cls) --demand[v];
      const bool ok = coverable(demand, k - 1);
      for (int v : cls) ++demand[v];
      if (ok) return true;
    }
    auto& slot = failed_[demand];
    slot = std::max(slot, k);
    return false;
  }

 private:
  // Walks the cycle starting after the pivot and emits maximal independent
  // sets of the demand support that contain the pivot.
  void enumerate_classes(const std::vector<int>& demand, int pivot, int step,
                         std::vector<int>& current, std::vector<std::vector<int>>& out) const {
    if (step == n_) {
      std::vector<char> in(n_, 0);
      for (int v : current) in[v] = 1;
      for (int v = 0; v < n_; ++v) {
        if (demand[v] == 0 || in[v]) continue;
        if (!in[(v + 1) % n_] && !in[(v + n_ - 1) % n_]) return;  // not maximal
      }
      out.push_back(current);
      return;
    }
    const int v = (pivot + step) % n_;
    const int previous = (v + n_ - 1) % n_;
    const bool previous_in = current.back() == previous;
    const bool closes_on_pivot = step == n_ - 1;
    if (demand[v] > 0 && !previous_in && !closes_on_pivot) {
      current.push_back(v);
      enumerate_classes(demand, pivot, step + 1, current, out);
      current.pop_back();
    }
    enumerate_classes(demand, pivot, step + 1, current, out);
  }

  int n_;
  int half_;
  std::map<std::vector<int>, int> failed_;
};

void check_subset(const Profile& p, std::span<const int> subset) {
  if (subset.empty()) throw DomainError("subset must be nonempty");
  for (int i : subset)
    if (i < 0 || i >= p.size()) throw DomainError("subset position out of range");
}

}  // namespace

int subset_value_path(const Profile& p, std::span<const int> subset) {
  check_subset(p, subset);
  std::vector<char> in(p.size(), 0);
  for (int i : subset) in[i] = 1;
  int value = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (!in[i]) continue;
    value = std::max(value, p[i]);
    if (i + 1 < p.size() && in[i + 1]) value = std::max(value, p[i] + p[i + 1]);
  }
  return value;
}

Verdict check_path(const Profile& p) {
  const int n = p.size();
  std::vector<int> chosen;
  for (int t = 1; t < n; ++t) {
    if (largest_bounded_subset(p.orders(), t, nullptr) > t) {
      largest_bounded_subset(p.orders(), t, &chosen);
      const int achieved = subset_value_path(p, chosen);
      return Verdict::fail(std::move(chosen), achieved);
    }
  }
  return Verdict::ok();
}

int cycle_chromatic_lower_bound(const Profile& w) {
  const int n = w.size();
  if (n < 3) throw DimensionError("cycle profile needs at least 3 entries");
  const int64_t total = w.total();
  const int half = n / 2;
  return std::max<int>(max_adjacent_pair(w), static_cast<int>((total + half - 1) / half));
}

int weighted_cycle_chromatic(const Profile& w) {
  const int n = w.size();
  if (n < 3) throw DimensionError("cycle profile needs at least 3 entries");
  if (n % 2 == 0) return max_adjacent_pair(w);
  OddCycleCover cover(n);
  std::vector<int> demand = w.orders();
  for (int k = cycle_chromatic_lower_bound(w);; ++k)
    if (cover.coverable(demand, k)) return k;
}

Verdict check_cycle(const Profile& p) {
  const int n = p.size();
  if (n < 3) throw DimensionError("cycle profile needs at least 3 entries");
  std::vector<int> rotated(n - 1), chosen, best_subset;
  for (int t = 1; t <= n - 2; ++t) {
    int best = 0;
    best_subset.clear();
    for (int skip = 0; skip < n; ++skip) {
      for (int i = 0; i < n - 1; ++i) rotated[i] = p[(skip + 1 + i) % n];
      const int size = largest_bounded_subset(rotated, t, nullptr);
      if (size <= t || size < best) continue;
      largest_bounded_subset(rotated, t, &chosen);
      for (int& i : chosen) i = (skip + 1 + i) % n;
      std::sort(chosen.begin(), chosen.end());
      if (size > best || chosen < best_subset) {
        best = size;
        best_subset = chosen;
      }
    }
    if (best > t) {
      const int achieved = cyclic_subset_value(p, best_subset);
      return Verdict::fail(std::move(best_subset), achieved);
    }
  }
  // Fast path: the lower bound alone settles the full set when it reaches n.
  if (cycle_chromatic_lower_bound(p) >= n) return Verdict::ok();
  const int chi = weighted_cycle_chromatic(p);
  if (chi >= n) return Verdict::ok();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return Verdict::fail(std::move(all), chi);
}

Verdict check_general(const HostGraph& h, const Profile& p, CheckMode mode, int host_cap,
                      int vertex_cap) {
  const int n = h.vertex_count();
  if (p.size() != n)
    throw DimensionError("profile length " + std::to_string(p.size()) +
                         " does not match vertex count " + std::to_string(n));
  if (n > host_cap || n > 63)
    throw ResourceError("2^" + std::to_string(n) + " subsets exceed the subset cap 2^" +
                        std::to_string(std::min(host_cap, 63)));
  const auto host = detail::BitGraph::from(h, 64);
  std::vector<int> subset;
  for (int k = 1; k <= n; ++k) {
    subset.resize(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      int value = 0;
      if (mode == CheckMode::clique) {
        detail::Mask mask = 0;
        for (int v : subset) mask |= detail::bit(v);
        value = detail::max_weight_clique(host.adj, p.orders(), mask);
      } else {
        const auto g = detail::BitGraph::replication(h, p, subset, vertex_cap);
        value = detail::max_clique(g);
        if (value < k) {
          const auto colors = detail::optimal_coloring(g);
          value = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
        }
      }
      if (value < k) return Verdict::fail(subset, value);
      // next combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return Verdict::ok();
}

}  // namespace rhor
