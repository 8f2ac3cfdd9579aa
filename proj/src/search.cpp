#include "rhor/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <span>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "rhor/constructions.hpp"
#include "rhor/errors.hpp"
#include "rhor/verifier.hpp"

namespace rhor {
namespace {

constexpr int kNone = -1000;

// One deepening level: every profile of length n with total exactly `level`.
//
// Row k of the take/skip tables describes the assigned prefix p[0..k-1]: for
// each threshold t, the largest subset of the prefix with path value <= t
// that excludes (skip) or includes (take) position k-1. A prefix whose
// subsets already beat some t cannot be completed, and the tables also bound
// how many small orders the rest of the profile may still use.
class LevelSearch {
 public:
  LevelSearch(Family family, int n, int64_t level, PruneToggles prune,
              std::span<const int64_t> segment_min)
      : family_(family),
        n_(n),
        level_(level),
        prune_(prune),
        max_t_(family == Family::path ? n - 1 : n - 2),
        max_m_(std::max(max_t_, 0) / 2),
        values_(n, 0),
        skip_((n + 1) * (max_t_ + 1), 0),
        take_((n + 1) * (max_t_ + 1), kNone),
        le_(max_m_ + 1, 0),
        cap_(max_t_ + 2, 0),
        segment_min_(segment_min) {}

  // Assigns the next position if it survives pruning.
  bool push(int v) {
    const int k = depth_;
    const int64_t remaining = level_ - sum_;
    const int rest = n_ - k - 1;
    const bool leaf = rest == 0;
    const bool tables_valid = family_ == Family::path || !leaf;
    const int w = max_t_ + 1;
    int* skip_next = &skip_[(k + 1) * w];
    int* take_next = &take_[(k + 1) * w];
    const int* skip_prev = &skip_[k * w];
    const int* take_prev = &take_[k * w];
    const int previous = k > 0 ? values_[k - 1] : 0;

    for (int t = 1; t <= max_t_; ++t) {
      const int s = std::max(skip_prev[t], take_prev[t]);
      int tk = kNone;
      if (v <= t) {
        int base = skip_prev[t];
        if (k > 0 && previous + v <= t) base = std::max(base, take_prev[t]);
        tk = 1 + base;
      }
      skip_next[t] = s;
      take_next[t] = tk;
      if (prune_.prefix && tables_valid && std::max(s, tk) > t) return false;
    }

    // cap_[m] bounds how many of the unassigned orders may be <= m.
    if (prune_.floor || (prune_.prefix && tables_valid)) {
      for (int m = 1; m <= max_t_; ++m) cap_[m] = rest;
      if (prune_.floor) {
        for (int m = 1; m <= max_m_; ++m)
          cap_[m] = std::min(cap_[m], 2 * m - le_[m] - (v <= m ? 1 : 0));
      }
      if (prune_.prefix && tables_valid) {
        // Unassigned orders <= t/2 can all join the best prefix subset, and
        // any run of orders <= t contributes every other member.
        const int slack = family_ == Family::cycle ? 1 : 0;
        for (int t = 1; t <= max_t_; ++t) {
          const int room = t - std::max(skip_next[t], take_next[t] - 1) + slack;
          if (t >= 2) cap_[t / 2] = std::min(cap_[t / 2], room);
          cap_[t] = std::min(cap_[t], 2 * room);
        }
      }
      int64_t least = rest;
      int running = rest;
      for (int m = max_t_; m >= 1; --m) {
        running = std::min(running, cap_[m]);
        if (running < 0) return false;
        least += rest - running;
      }
      if (rest > 0 && least > remaining - v) return false;
    }

    // The unassigned stretch is itself a feasible path profile.
    if (prune_.prefix && rest > 0 && rest < static_cast<int>(segment_min_.size()) &&
        segment_min_[rest] > remaining - v)
      return false;

    int64_t edge_min = edge_min_;
    if (k > 0) edge_min += std::min(previous, v);
    if (prune_.lm1 && family_ == Family::path) {
      const int64_t after = remaining - v;
      const int64_t future = rest > 0 ? std::min<int64_t>(after, v + after - 1) : 0;
      const int64_t need = int64_t{n_} * (n_ + 1) / 2 - level_;
      if (edge_min + future < need) return false;
    }

    values_[k] = v;
    sum_ += v;
    edge_min_saved_[k] = edge_min_;
    edge_min_ = edge_min;
    for (int m = v; m <= max_m_; ++m) ++le_[m];
    ++depth_;
    ++nodes_;
    return true;
  }

  void pop() {
    --depth_;
    const int v = values_[depth_];
    sum_ -= v;
    edge_min_ = edge_min_saved_[depth_];
    for (int m = v; m <= max_m_; ++m) --le_[m];
  }

  void run() {
    const int k = depth_;
    if (k == n_) {
      leaf();
      return;
    }
    const auto [low, high] = candidates();
    for (int64_t v = low; v <= high; ++v) {
      if (push(static_cast<int>(v))) {
        run();
        pop();
      }
    }
  }

  // Orders allowed at the next position: the last one is forced by the level.
  std::pair<int64_t, int64_t> candidates() const {
    const int64_t remaining = level_ - sum_;
    const int rest = n_ - depth_ - 1;
    if (rest == 0) {
      if (remaining < 1 || remaining > kMaxOrder) return {1, 0};
      return {remaining, remaining};
    }
    return {1, std::min<int64_t>(remaining - rest, kMaxOrder)};
  }

  int depth() const { return depth_; }
  const std::vector<int>& values() const { return values_; }
  uint64_t nodes() const { return nodes_; }
  std::vector<Profile>& found() { return found_; }

  static constexpr int kMaxOrder = 1 << 20;

 private:
  void leaf() {
    Profile p(values_);
    if (family_ == Family::path) {
      if (p.reversed() < p) return;
      if (!prune_.prefix && !check_path(p).feasible) return;
      found_.push_back(std::move(p));
    } else {
      if (check_cycle(p).feasible) found_.push_back(canonical_cycle_profile(p));
    }
  }

  Family family_;
  int n_;
  int64_t level_;
  PruneToggles prune_;
  int max_t_;
  int max_m_;
  std::vector<int> values_;
  std::vector<int> skip_;
  std::vector<int> take_;
  std::vector<int> le_;
  std::vector<int> cap_;
  std::span<const int64_t> segment_min_;
  std::vector<int64_t> edge_min_saved_ = std::vector<int64_t>(n_ + 1, 0);
  int64_t edge_min_ = 0;
  int64_t sum_ = 0;
  int depth_ = 0;
  uint64_t nodes_ = 0;
  std::vector<Profile> found_;
};

struct LevelOutcome {
  std::vector<Profile> profiles;
  uint64_t nodes = 0;
};

// Splits the level on the first two orders and drains it with `threads`
// workers. The output is sorted, so it does not depend on scheduling.
LevelOutcome search_level(Family family, int n, int64_t level, const PruneToggles& prune,
                          std::span<const int64_t> segment_min, int threads) {
  const int split = std::min(n, 2);
  std::vector<std::vector<int>> tasks;
  {
    LevelSearch probe(family, n, level, prune, segment_min);
    auto collect = [&](auto& self) -> void {
      if (probe.depth() == split) {
        tasks.emplace_back(probe.values().begin(), probe.values().begin() + split);
        return;
      }
      const auto [low, high] = probe.candidates();
      for (int64_t v = low; v <= high; ++v) {
        if (probe.push(static_cast<int>(v))) {
          self(self);
          probe.pop();
        }
      }
    };
    collect(collect);
  }

  LevelOutcome outcome;
  std::mutex guard;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    LevelSearch search(family, n, level, prune, segment_min);
    for (size_t i = next++; i < tasks.size(); i = next++) {
      bool ok = true;
      int pushed = 0;
      for (int v : tasks[i]) {
        if (!search.push(v)) {
          ok = false;
          break;
        }
        ++pushed;
      }
      if (ok) search.run();
      while (pushed-- > 0) search.pop();
    }
    std::lock_guard lock(guard);
    outcome.nodes += search.nodes();
    auto& found = search.found();
    outcome.profiles.insert(outcome.profiles.end(), found.begin(), found.end());
  };
  const int count = std::max(1, threads);
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(outcome.profiles.begin(), outcome.profiles.end());
  outcome.profiles.erase(std::unique(outcome.profiles.begin(), outcome.profiles.end()),
                         outcome.profiles.end());
  return outcome;
}

SearchResult run_search(Family family, int n, const SearchConfig& cfg);

// Memoized minimum totals of paths, shared by all searches in the process.
int64_t path_minimum(int n, const SearchConfig& cfg) {
  static std::mutex lock;
  static std::map<std::pair<int, bool>, int64_t> known;
  const auto key = std::make_pair(n, cfg.prune == PruneToggles{});
  {
    std::lock_guard guard(lock);
    if (auto it = known.find(key); it != known.end()) return it->second;
  }
  const int64_t rho = run_search(Family::path, n, cfg).rho;
  std::lock_guard guard(lock);
  known[key] = rho;
  return rho;
}

SearchResult run_search(Family family, int n, const SearchConfig& cfg) {
  if (family == Family::path && n < 1) throw DomainError("path search needs n >= 1");
  if (family == Family::cycle && n < 3) throw DomainError("cycle search needs n >= 3");
  const int64_t start = search_start_level(family, n);
  if (cfg.budget && *cfg.budget < start)
    throw ParameterError("budget " + std::to_string(*cfg.budget) +
                         " is below the proven lower bound " + std::to_string(start));

  std::optional<ResultCache> cache;
  if (cfg.cache_path) cache.emplace(*cfg.cache_path);
  if (cache && !cfg.recompute) {
    if (auto hit = cache->lookup(family, n)) {
      if (cfg.budget && hit->rho > *cfg.budget)
        throw BudgetExhaustedError("no feasible profile with total <= " +
                                       std::to_string(*cfg.budget) + " (cached minimum " +
                                       std::to_string(hit->rho) + ")",
                                   static_cast<int>(*cfg.budget));
      return *hit;
    }
  }

  const auto started = std::chrono::steady_clock::now();
  // Minimum totals of shorter paths, for the stretch bound. A cycle of
  // length n contains paths of up to n - 1 positions.
  std::vector<int64_t> segment_min{0};
  if (cfg.prune.prefix) {
    SearchConfig inner = cfg;
    inner.budget.reset();
    inner.cache_path.reset();
    const int longest = family == Family::path ? n - 1 : n - 1;
    for (int r = 1; r <= longest; ++r) segment_min.push_back(path_minimum(r, inner));
  }
  SearchResult result;
  result.family = family;
  result.n = n;
  int64_t cap = cfg.budget ? *cfg.budget : path_ub_value(n);
  for (int64_t level = start;; ++level) {
    if (level > cap) {
      if (cfg.budget || family == Family::path)
        throw BudgetExhaustedError("no feasible profile with total <= " + std::to_string(cap),
                                   static_cast<int>(cap));
      cap = level;  // cycles: the path bound is only a starting cap
    }
    auto outcome = search_level(family, n, level, cfg.prune, segment_min, cfg.threads);
    result.nodes += outcome.nodes;
    if (!outcome.profiles.empty()) {
      result.rho = level;
      result.profiles = std::move(outcome.profiles);
      break;
    }
  }
  for (const auto& p : result.profiles) {
    const bool ok = family == Family::path ? check_path(p).feasible : check_cycle(p).feasible;
    if (!ok || p.total() != result.rho)
      throw std::logic_error("search returned an infeasible profile");
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (cache) cache->append(result);
  return result;
}

// Leaves of S(a,b) form an independent set, as do one center with the
// opposite leaves; sorted ascending, the k-th order must reach k.
bool independent_ok(std::vector<int> orders) {
  std::sort(orders.begin(), orders.end());
  for (size_t k = 0; k < orders.size(); ++k)
    if (orders[k] < static_cast<int>(k) + 1) return false;
  return true;
}

class DoubleStarLevel {
 public:
  DoubleStarLevel(int a, int b, int64_t level)
      : a_(a), b_(b), level_(level), host_(double_star_graph(DoubleStarSpec(a, b))),
        leaves_(a + b) {}

  void run(DoubleStarMinimum& out) {
    out_ = &out;
    leaf(0, level_);
  }

 private:
  void leaf(int i, int64_t remaining) {
    const int count = a_ + b_;
    if (i == count) {
      if (!independent_ok(leaves_)) return;
      centers(remaining);
      return;
    }
    const bool side_start = i == 0 || i == a_;
    const int cap = side_start ? static_cast<int>(remaining) : leaves_[i - 1];
    // Every later leaf and both centers need at least one vertex.
    const int64_t reserve = count - i - 1 + 2;
    for (int v = 1; v <= cap && v + reserve <= remaining; ++v) {
      leaves_[i] = v;
      leaf(i + 1, remaining - v);
    }
  }

  void centers(int64_t remaining) {
    for (int64_t c = 1; c < remaining; ++c) {
      const int d = static_cast<int>(remaining - c);
      std::vector<int> with_c(leaves_.begin() + a_, leaves_.end());
      with_c.push_back(static_cast<int>(c));
      std::vector<int> with_d(leaves_.begin(), leaves_.begin() + a_);
      with_d.push_back(d);
      if (!independent_ok(with_c) || !independent_ok(with_d)) continue;
      std::vector<int> orders(leaves_.begin(), leaves_.begin() + a_);
      orders.push_back(static_cast<int>(c));
      orders.push_back(d);
      orders.insert(orders.end(), leaves_.begin() + a_, leaves_.end());
      Profile p(std::move(orders));
      ++out_->checked;
      if (check_general(host_, p, CheckMode::clique).feasible) out_->profiles.push_back(p);
    }
  }

  int a_, b_;
  int64_t level_;
  HostGraph host_;
  std::vector<int> leaves_;
  DoubleStarMinimum* out_ = nullptr;
};

}  // namespace

DoubleStarMinimum double_star_minimum(int a, int b, int64_t budget) {
  const DoubleStarSpec spec(a, b);
  const int64_t leaves = a + b;
  DoubleStarMinimum out;
  for (int64_t level = leaves * (leaves + 1) / 2 + 2; level <= budget; ++level) {
    DoubleStarLevel(a, b, level).run(out);
    if (!out.profiles.empty()) {
      out.rho = level;
      std::sort(out.profiles.begin(), out.profiles.end());
      return out;
    }
  }
  throw BudgetExhaustedError("no double-star profile with total <= " + std::to_string(budget),
                             static_cast<int>(budget));
}

std::string to_string(Family f) { return f == Family::path ? "path" : "cycle"; }

Family parse_family(const std::string& text) {
  if (text == "path") return Family::path;
  if (text == "cycle") return Family::cycle;
  throw ParseError("unknown family '" + text + "'");
}

int64_t search_start_level(Family family, int n) {
  if (family == Family::path) return simple_lower(n);
  // The n-1 smallest orders obey the sorted floors; the largest is at least
  // the (n-1)-th smallest.
  return simple_lower(n - 1) + n / 2;
}

SearchResult min_profiles_path(int n, const SearchConfig& cfg) {
  return run_search(Family::path, n, cfg);
}

SearchResult min_profiles_cycle(int n, const SearchConfig& cfg) {
  return run_search(Family::cycle, n, cfg);
}

SearchResult min_profiles(Family family, int n, const SearchConfig& cfg) {
  return run_search(family, n, cfg);
}

std::vector<ConjectureRow> verify_conjectures(int n_max, const SearchConfig& cfg) {
  if (n_max < 5) throw DomainError("conjecture check needs n_max >= 5");
  std::vector<ConjectureRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    ConjectureRow row;
    row.n = n;
    row.rho_path = min_profiles_path(n, cfg).rho;
    row.upper_bound = path_ub_value(n);
    row.gap = row.rho_path - row.upper_bound;
    if (n % 2 == 1) row.tight = row.rho_path == row.upper_bound;
    row.residual = Rational(row.rho_path) - Rational(5 * int64_t{n} * n, 16);
    if (n >= 6) {
      row.rho_cycle = min_profiles_cycle(n, cfg).rho;
      row.cycle_matches = *row.rho_cycle == row.rho_path;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string to_json_line(const SearchResult& r) {
  nlohmann::json profiles = nlohmann::json::array();
  for (const auto& p : r.profiles) profiles.push_back(p.orders());
  nlohmann::json j = {{"family", to_string(r.family)},
                      {"n", r.n},
                      {"rho", r.rho},
                      {"count", r.profiles.size()},
                      {"profiles", profiles},
                      {"nodes", r.nodes},
                      {"seconds", r.seconds}};
  return j.dump();
}

SearchResult from_json_line(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    SearchResult r;
    r.family = parse_family(j.at("family").get<std::string>());
    r.n = j.at("n").get<int>();
    r.rho = j.at("rho").get<int64_t>();
    for (const auto& p : j.at("profiles")) r.profiles.emplace_back(p.get<std::vector<int>>());
    if (j.at("count").get<size_t>() != r.profiles.size())
      throw ParseError("count does not match profile list");
    r.nodes = j.value("nodes", uint64_t{0});
    r.seconds = j.value("seconds", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad search result line: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad search result line: ") + e.what());
  }
}

std::optional<SearchResult> ResultCache::lookup(Family family, int n) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<SearchResult> hit;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto r = from_json_line(line);
      if (r.family == family && r.n == n) hit = std::move(r);
    } catch (const ParseError&) {
      // a torn trailing line from an interrupted run
    }
  }
  return hit;
}

void ResultCache::append(const SearchResult& result) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw ResourceError("cannot write cache file " + path_);
  out << to_json_line(result) << '\n';
}

}  // namespace rhor
