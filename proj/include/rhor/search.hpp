#pragma once

// Exhaustive search for minimum-total feasible profiles of paths and cycles.
//
// Iterative deepening on the profile total: level s enumerates every profile
// with total exactly s, left to right with ascending orders. The first level
// holding a feasible profile gives the minimum, and that level is drained
// completely so the returned list is the full set of canonical minima.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhor/bounds.hpp"
#include "rhor/graph.hpp"

namespace rhor {

enum class Family { path, cycle };

std::string to_string(Family f);
/// Throws ParseError for anything but "path" or "cycle".
Family parse_family(const std::string& text);

struct PruneToggles {
  bool prefix = true;  ///< prefix feasibility and its completion bound
  bool floor = true;   ///< sorted floors of the partial multiset
  bool lm1 = true;     ///< edge-min inequality (paths only)

  static PruneToggles none() { return {false, false, false}; }
  friend bool operator==(const PruneToggles&, const PruneToggles&) = default;
};

struct SearchConfig {
  std::optional<int64_t> budget;  ///< largest total to try
  PruneToggles prune;
  int threads = 1;
  std::optional<std::string> cache_path;
  bool recompute = false;
};

struct SearchResult {
  Family family = Family::path;
  int n = 0;
  int64_t rho = 0;
  std::vector<Profile> profiles;  ///< canonical, sorted, duplicate-free
  uint64_t nodes = 0;
  double seconds = 0;
};

/// Throws DomainError for n < 1, ParameterError for a budget below the
/// starting level and BudgetExhaustedError when no profile fits the budget.
SearchResult min_profiles_path(int n, const SearchConfig& cfg = {});

/// As above for C_n, n >= 3. Without a budget the cap starts at
/// path_ub_value(n) and grows until a feasible profile appears.
SearchResult min_profiles_cycle(int n, const SearchConfig& cfg = {});

SearchResult min_profiles(Family family, int n, const SearchConfig& cfg = {});

/// First level searched: a proven lower bound on the minimum total.
int64_t search_start_level(Family family, int n);

struct ConjectureRow {
  int n = 0;
  int64_t rho_path = 0;
  int64_t upper_bound = 0;             ///< path_ub_value(n)
  int64_t gap = 0;                     ///< rho_path - upper_bound
  std::optional<bool> tight;           ///< odd n: exact value equals the bound
  Rational residual;                   ///< rho_path - 5n^2/16
  std::optional<int64_t> rho_cycle;    ///< n >= 6
  std::optional<bool> cycle_matches;   ///< rho_cycle == rho_path
};

/// Rows for n = 1..n_max. Throws DomainError for n_max < 5.
std::vector<ConjectureRow> verify_conjectures(int n_max, const SearchConfig& cfg = {});

/// Exhaustive minimum for the double star S(a,b) by iterative deepening.
/// Leaf orders on each side are enumerated nonincreasing (the leaves of a
/// center are interchangeable); each candidate is decided by check_general.
struct DoubleStarMinimum {
  int64_t rho = 0;
  std::vector<Profile> profiles;  ///< leaves nonincreasing on each side
  uint64_t checked = 0;
};

/// Throws BudgetExhaustedError when nothing is feasible with total <= budget.
DoubleStarMinimum double_star_minimum(int a, int b, int64_t budget);

// Cache --------------------------------------------------------------------

/// Append-only JSON-lines file of completed results keyed by (family, n);
/// the last entry for a key wins.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  std::optional<SearchResult> lookup(Family family, int n) const;
  void append(const SearchResult& result) const;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// {"family":..,"n":..,"rho":..,"count":..,"profiles":[[..],..],"nodes":..,"seconds":..}
std::string to_json_line(const SearchResult& r);
/// Throws ParseError for malformed input.
SearchResult from_json_line(const std::string& line);

}  // namespace rhor
