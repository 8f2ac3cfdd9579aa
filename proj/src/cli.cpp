#include "rhor/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "rhor/bounds.hpp"
#include "rhor/constructions.hpp"
#include "rhor/errors.hpp"
#include "rhor/io.hpp"
#include "rhor/random_coloring.hpp"
#include "rhor/search.hpp"
#include "rhor/verifier.hpp"

namespace rhor::cli {
namespace {

using json = nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Target {
  std::string family;  // path, cycle, doublestar, anticlique, complete, file
  HostGraph graph;
  bool perfect = false;
};

Target resolve_target(const std::string& spec, const Profile& p) {
  std::string sized = spec;
  if (spec == "path" || spec == "cycle" || spec == "anticlique" || spec == "complete")
    sized = spec + ":" + std::to_string(p.size());
  Target t;
  t.graph = parse_graph_spec(sized);
  t.family = sized.front() == '@' ? "file" : sized.substr(0, sized.find(':'));
  t.perfect = t.family == "path" || t.family == "anticlique" || t.family == "complete" ||
              t.family == "doublestar" || (t.family == "cycle" && p.size() % 2 == 0);
  if (t.graph.vertex_count() != p.size())
    throw DimensionError("profile has " + std::to_string(p.size()) + " entries but " + spec +
                         " has " + std::to_string(t.graph.vertex_count()) + " vertices");
  return t;
}

CheckMode parse_mode(const std::string& text) {
  if (text == "clique") return CheckMode::clique;
  if (text == "chromatic") return CheckMode::chromatic;
  throw UsageError("--mode must be 'clique' or 'chromatic'");
}

Verdict verify_target(const Target& target, const Profile& p, const std::string& mode) {
  if (mode.empty()) {
    if (target.family == "path") return check_path(p);
    if (target.family == "cycle") return check_cycle(p);
    return check_general(target.graph, p, target.perfect ? CheckMode::clique : CheckMode::chromatic);
  }
  return check_general(target.graph, p, parse_mode(mode));
}

std::string format_set(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("invalid index '" + item + "'");
    }
  }
  return out;
}

// verify ------------------------------------------------------------------

int cmd_verify(const std::string& spec, const std::string& profile_text, const std::string& mode,
               bool as_json, std::ostream& out) {
  const Profile p = parse_profile(profile_text);
  const Target target = resolve_target(spec, p);
  const Verdict v = verify_target(target, p, mode);
  if (as_json) {
    json j = {{"command", "verify"},   {"target", spec},        {"profile", p.orders()},
              {"total", p.total()},    {"feasible", v.feasible}};
    if (v.witness) j["witness"] = {{"subset", v.witness->subset}, {"achieved", v.witness->achieved}};
    out << j.dump() << '\n';
  } else if (v.feasible) {
    out << "feasible (total " << p.total() << ")\n";
  } else {
    out << "infeasible: witness " << format_set(v.witness->subset) << " achieved "
        << v.witness->achieved << " (total " << p.total() << ")\n";
  }
  return v.feasible ? kSuccess : kInfeasible;
}

// construct ---------------------------------------------------------------

int cmd_construct(const std::vector<std::string>& args, bool as_json, std::ostream& out) {
  if (args.empty()) throw UsageError("construct needs a kind: path-ub, double-star or anticlique");
  auto number = [&](size_t i) {
    if (i >= args.size()) throw UsageError("construct " + args[0] + ": missing argument");
    try {
      size_t used = 0;
      const int v = std::stoi(args[i], &used);
      if (used != args[i].size()) throw std::invalid_argument(args[i]);
      return v;
    } catch (const std::exception&) {
      throw UsageError("construct " + args[0] + ": '" + args[i] + "' is not an integer");
    }
  };
  const std::string& kind = args[0];
  json j = {{"command", "construct"}, {"kind", kind}};
  Profile p;
  if (kind == "path-ub") {
    if (args.size() != 2) throw UsageError("usage: construct path-ub N");
    const int n = number(1);
    p = path_ub_profile(n);
    j["n"] = n;
    j["value"] = path_ub_value(n);
  } else if (kind == "double-star") {
    if (args.size() != 3) throw UsageError("usage: construct double-star A B");
    const DoubleStarSpec ds(number(1), number(2));
    p = double_star_profile(ds);
    const HostGraph g = double_star_graph(ds);
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["a"] = ds.a;
    j["b"] = ds.b;
    j["n"] = ds.order();
    j["g"] = ds.run_length();
    j["value"] = double_star_value(ds);
    j["graph"] = {{"n", g.vertex_count()}, {"edges", edges}};
  } else if (kind == "anticlique") {
    if (args.size() != 2) throw UsageError("usage: construct anticlique N");
    const int n = number(1);
    p = anticlique_profile(n);
    j["n"] = n;
    j["value"] = int64_t{n} * (n + 1) / 2;
  } else {
    throw UsageError("unknown construction '" + kind + "'");
  }
  j["profile"] = p.orders();
  j["total"] = p.total();
  if (as_json)
    out << j.dump() << '\n';
  else
    out << format_profile(p) << '\n';
  return kSuccess;
}

// bounds ------------------------------------------------------------------

int cmd_bounds(const std::vector<std::string>& args, const std::string& params_text,
               bool as_stated, std::ostream& out) {
  if (args.size() != 2 || args[0] != "path") throw UsageError("usage: bounds path N");
  int n = 0;
  try {
    n = std::stoi(args[1]);
  } catch (const std::exception&) {
    throw UsageError("bounds: '" + args[1] + "' is not an integer");
  }
  if (n < 1) throw DomainError("bounds needs n >= 1");
  json j = {{"command", "bounds"},
            {"family", "path"},
            {"n", n},
            {"simple_lower", simple_lower(n)},
            {"upper_bound", path_ub_value(n)},
            {"trivial_upper", int64_t{n} * (n + 1) / 2}};
  Th1Params params = Th1Params::corollary();
  if (!params_text.empty()) {
    std::vector<Rational> values;
    std::stringstream ss(params_text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
    if (values.size() != 5) throw ParameterError("--params needs five values a',a,b,c,d");
    params = {values[0], values[1], values[2], values[3], values[4]};
    params.validate();
  }
  if (n % 2 == 0) {
    const Rational th1 = th1_value(n, params);
    j["th1"] = {{"params",
                 {{"a_prime", to_string(params.a_prime)},
                  {"a", to_string(params.a)},
                  {"b", to_string(params.b)},
                  {"c", to_string(params.c)},
                  {"d", to_string(params.d)}}},
                {"value", to_string(th1)},
                {"approx", boost::rational_cast<double>(th1)}};
    const Rational cor = corollary_value(n);
    j["corollary"] = {{"value", to_string(cor)}, {"approx", boost::rational_cast<double>(cor)}};
    if (as_stated) {
      const Rational stated = corollary_value(n, true);
      j["corollary_as_stated"] = {{"value", to_string(stated)},
                                  {"approx", boost::rational_cast<double>(stated)}};
    }
  } else {
    j["th1"] = nullptr;
    j["corollary"] = nullptr;
  }
  out << j.dump() << '\n';
  return kSuccess;
}

// search ------------------------------------------------------------------

struct SearchOptions {
  std::optional<int64_t> budget;
  bool no_prune = false;
  std::string disable;
  int threads = 1;
  std::string cache;
  bool no_cache = false;
  bool recompute = false;
};

SearchConfig make_config(const SearchOptions& o) {
  SearchConfig cfg;
  cfg.budget = o.budget;
  cfg.threads = std::max(1, o.threads);
  cfg.recompute = o.recompute;
  if (o.no_prune) cfg.prune = PruneToggles::none();
  std::stringstream ss(o.disable);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "prefix") cfg.prune.prefix = false;
    else if (item == "floor") cfg.prune.floor = false;
    else if (item == "lm1") cfg.prune.lm1 = false;
    else if (!item.empty()) throw UsageError("--disable accepts prefix, floor, lm1");
  }
  // Cross-validation runs with pruning switched off never touch the cache.
  if (!o.no_cache && cfg.prune == PruneToggles{}) {
    const std::string path = o.cache.empty() ? default_cache_path() : o.cache;
    if (!path.empty()) cfg.cache_path = path;
  }
  return cfg;
}

std::string family_symbol(Family f) { return f == Family::path ? "P" : "C"; }

int cmd_search(const std::vector<std::string>& args, const SearchOptions& options, bool as_json,
               std::ostream& out, std::ostream& err) {
  if (args.size() != 2) throw UsageError("usage: search path|cycle N");
  const Family family = parse_family(args[0]);
  int n = 0;
  try {
    n = std::stoi(args[1]);
  } catch (const std::exception&) {
    throw UsageError("search: '" + args[1] + "' is not an integer");
  }
  SearchConfig cfg = make_config(options);
  if (cfg.cache_path) {
    std::error_code ec;
    const auto dir = std::filesystem::path(*cfg.cache_path).parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir, ec);
  }
  SearchResult r;
  try {
    r = min_profiles(family, n, cfg);
  } catch (const ResourceError& e) {
    if (dynamic_cast<const BudgetExhaustedError*>(&e) || !cfg.cache_path) throw;
    err << "rho-r: warning: cache unavailable (" << e.what() << ")\n";
    cfg.cache_path.reset();
    r = min_profiles(family, n, cfg);
  }
  if (as_json) {
    json j = json::parse(to_json_line(r));
    j["command"] = "search";
    out << j.dump() << '\n';
  } else {
    out << "rho_R(" << family_symbol(family) << "_" << n << ") = " << r.rho << " ("
        << r.profiles.size() << " profiles, " << r.nodes << " nodes, " << r.seconds << " s)\n";
    for (const auto& p : r.profiles) out << format_profile(p) << '\n';
  }
  return kSuccess;
}

int cmd_conjectures(int n_max, const SearchOptions& options, bool as_json, std::ostream& out) {
  const auto rows = verify_conjectures(n_max, make_config(options));
  bool all_hold = true;
  json list = json::array();
  for (const auto& row : rows) {
    if (row.tight && !*row.tight) all_hold = false;
    if (row.cycle_matches && !*row.cycle_matches) all_hold = false;
    json r = {{"n", row.n},
              {"rho_path", row.rho_path},
              {"upper_bound", row.upper_bound},
              {"gap", row.gap},
              {"residual", to_string(row.residual)},
              {"tight", row.tight ? json(*row.tight) : json(nullptr)},
              {"rho_cycle", row.rho_cycle ? json(*row.rho_cycle) : json(nullptr)},
              {"cycle_matches", row.cycle_matches ? json(*row.cycle_matches) : json(nullptr)}};
    list.push_back(r);
  }
  if (as_json) {
    out << json{{"command", "conjectures"}, {"max", n_max}, {"all_hold", all_hold}, {"rows", list}}
               .dump()
        << '\n';
  } else {
    out << "n  rho(P_n)  bound  gap  odd-tight  rho-5n^2/16  rho(C_n)  C=P\n";
    for (const auto& row : rows) {
      out << row.n << "  " << row.rho_path << "  " << row.upper_bound << "  " << row.gap << "  "
          << (row.tight ? (*row.tight ? "yes" : "NO") : "-") << "  " << to_string(row.residual)
          << "  " << (row.rho_cycle ? std::to_string(*row.rho_cycle) : "-") << "  "
          << (row.cycle_matches ? (*row.cycle_matches ? "yes" : "NO") : "-") << '\n';
    }
  }
  return all_hold ? kSuccess : kInfeasible;
}

// rainbow / badcolor ------------------------------------------------------

int cmd_rainbow(const std::string& spec, const std::string& profile_text,
                const std::string& coloring_path, bool random, uint64_t seed, bool as_json,
                std::ostream& out) {
  const Profile p = parse_profile(profile_text);
  const Target target = resolve_target(spec, p);
  if (random == !coloring_path.empty())
    throw UsageError("rainbow needs exactly one of --coloring FILE or --random");
  ColoringAssignment c;
  if (random) {
    c = random_proper_coloring(target.graph, p, seed);
  } else {
    std::ifstream in(coloring_path);
    if (!in) throw ParseError("cannot open coloring file " + coloring_path);
    c = read_coloring(in);
  }
  try {
    const RainbowAssignment r = extract_rainbow(target.graph, p, c);
    if (as_json) {
      json picks = json::array();
      for (size_t i = 0; i < r.picks.size(); ++i)
        picks.push_back({{"clique", r.picks[i].clique},
                         {"member", r.picks[i].member},
                         {"color", r.colors[i]}});
      json j = {{"command", "rainbow"}, {"rainbow", true}, {"picks", picks}};
      if (random) j["coloring"] = c.colors;
      out << j.dump() << '\n';
    } else {
      for (size_t i = 0; i < r.picks.size(); ++i)
        out << "clique " << r.picks[i].clique << " member " << r.picks[i].member << " color "
            << r.colors[i] << '\n';
    }
    return kSuccess;
  } catch (const NoRainbowError& e) {
    if (as_json) {
      json j = {{"command", "rainbow"},
                {"rainbow", false},
                {"hall_set", e.hall_set()},
                {"colors_used", e.colors_used()}};
      if (random) j["coloring"] = c.colors;
      out << j.dump() << '\n';
    } else {
      out << "no rainbow: cliques " << format_set(e.hall_set()) << " use " << e.colors_used()
          << " colors\n";
    }
    return kInfeasible;
  }
}

int cmd_badcolor(const std::string& spec, const std::string& profile_text,
                 const std::string& subset_text, bool as_json, std::ostream& out) {
  const Profile p = parse_profile(profile_text);
  const Target target = resolve_target(spec, p);
  std::vector<int> subset;
  if (subset_text.empty()) {
    const Verdict v = verify_target(target, p, "");
    if (v.feasible) throw DomainError("profile is feasible; every proper coloring has a rainbow");
    subset = v.witness->subset;
  } else {
    subset = parse_index_list(subset_text);
  }
  const ColoringAssignment c = make_bad_coloring(target.graph, p, subset);
  const ReplicationLayout layout(p);
  std::vector<int> on_subset;
  for (int v : subset)
    for (int m = 0; m < p[v]; ++m) on_subset.push_back(c.colors[layout.offset(v) + m]);
  std::sort(on_subset.begin(), on_subset.end());
  on_subset.erase(std::unique(on_subset.begin(), on_subset.end()), on_subset.end());
  std::sort(subset.begin(), subset.end());
  if (as_json) {
    out << json{{"command", "badcolor"},
                {"subset", subset},
                {"colors_on_subset", on_subset.size()},
                {"coloring", c.colors}}
               .dump()
        << '\n';
  } else {
    write_coloring(out, c);
  }
  return kSuccess;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return "usage-error";
  if (dynamic_cast<const BudgetExhaustedError*>(&e)) return "budget-exhausted";
  if (dynamic_cast<const ResourceError*>(&e)) return "resource-error";
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension-error";
  if (dynamic_cast<const DomainError*>(&e)) return "domain-error";
  if (dynamic_cast<const ParameterError*>(&e)) return "parameter-error";
  if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation-error";
  if (dynamic_cast<const NoRainbowError*>(&e)) return "no-rainbow";
  return "internal-error";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ResourceError*>(&e)) return kResource;
  if (dynamic_cast<const NoRainbowError*>(&e)) return kInfeasible;
  if (dynamic_cast<const Error*>(&e)) return kUsage;
  return kResource;
}

}  // namespace

std::string default_cache_path() {
  if (const char* env = std::getenv("RHO_R_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::string(xdg) + "/rho-r/search.jsonl";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/rho-r/search.jsonl";
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow replication numbers: verify, construct, bound and search", "rho-r"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string target, profile_text, mode, coloring_path, subset_text, params_text, manifest;
  std::vector<std::string> positional;
  bool random = false, as_stated = false;
  uint64_t seed = kDefaultSeed;
  SearchOptions search;
  int n_max = 10;

  auto* verify = app.add_subcommand("verify", "decide whether a profile forces a rainbow copy");
  verify->add_option("target", target, "host graph")->required();
  verify->add_option("--profile", profile_text, "comma-separated clique orders")->required();
  verify->add_option("--mode", mode, "chromatic or clique (general check)");
  verify->add_flag("--json", as_json);

  auto* construct = app.add_subcommand("construct", "emit a known feasible profile");
  construct->add_option("args", positional, "path-ub N | double-star A B | anticlique N")
      ->required();
  construct->add_flag("--json", as_json);

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds for paths (JSON)");
  bounds->add_option("args", positional, "path N")->required();
  bounds->add_option("--params", params_text, "a',a,b,c,d as rationals");
  bounds->add_flag("--as-stated", as_stated, "also report the corollary as stated");
  bounds->add_flag("--json", as_json);

  auto add_search_options = [&](CLI::App* sub) {
    sub->add_flag("--no-prune", search.no_prune, "disable every pruning rule");
    sub->add_option("--disable", search.disable, "comma list of prefix, floor, lm1");
    sub->add_option("--threads", search.threads, "worker threads");
    sub->add_option("--cache", search.cache, "JSON-lines result cache");
    sub->add_flag("--no-cache", search.no_cache, "neither read nor write the cache");
    sub->add_flag("--recompute", search.recompute, "ignore cached results");
    sub->add_flag("--json", as_json);
  };
  auto* search_cmd = app.add_subcommand("search", "exhaustive minimal-profile search");
  search_cmd->add_option("args", positional, "path|cycle N")->required();
  search_cmd->add_option("--budget", search.budget, "largest total to try");
  add_search_options(search_cmd);

  auto* conjectures = app.add_subcommand("conjectures", "compare exact values with conjectures");
  conjectures->add_option("--max", n_max, "largest n")->required();
  add_search_options(conjectures);

  auto* rainbow = app.add_subcommand("rainbow", "extract a rainbow transversal from a coloring");
  rainbow->add_option("target", target, "host graph")->required();
  rainbow->add_option("--profile", profile_text)->required();
  rainbow->add_option("--coloring", coloring_path, "coloring file");
  rainbow->add_flag("--random", random, "use a random proper coloring");
  rainbow->add_option("--seed", seed, "seed for --random");
  rainbow->add_flag("--json", as_json);

  auto* badcolor = app.add_subcommand("badcolor", "proper coloring without a rainbow transversal");
  badcolor->add_option("target", target, "host graph")->required();
  badcolor->add_option("--profile", profile_text)->required();
  badcolor->add_option("--subset", subset_text, "witness subset (default: the verifier's)");
  badcolor->add_flag("--json", as_json);

  auto* suite = app.add_subcommand("suite", "run a manifest of commands");
  suite->add_option("manifest", manifest)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "rho-r: usage-error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(target, profile_text, mode, as_json, out);
    if (construct->parsed()) return cmd_construct(positional, as_json, out);
    if (bounds->parsed()) return cmd_bounds(positional, params_text, as_stated, out);
    if (search_cmd->parsed()) return cmd_search(positional, search, as_json, out, err);
    if (conjectures->parsed()) return cmd_conjectures(n_max, search, as_json, out);
    if (rainbow->parsed())
      return cmd_rainbow(target, profile_text, coloring_path, random, seed, as_json, out);
    if (badcolor->parsed()) return cmd_badcolor(target, profile_text, subset_text, as_json, out);
    if (suite->parsed()) return run_suite(manifest, out, err);
  } catch (const BudgetExhaustedError& e) {
    err << "rho-r: budget-exhausted: " << e.what() << " (largest total tried "
        << e.largest_tried() << ")\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "rho-r: " << error_kind(e) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

int run_suite(const std::string& manifest_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(manifest_path);
  if (!in) {
    err << "rho-r: usage-error: cannot open manifest " << manifest_path << '\n';
    return kUsage;
  }
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    err << "rho-r: parse-error: manifest: " << e.what() << '\n';
    return kUsage;
  }
  const json cases = manifest.value("cases", json::array());
  int passed = 0, failed = 0;
  for (const auto& c : cases) {
    const std::string name = c.value("name", "unnamed");
    const auto args = c.at("args").get<std::vector<std::string>>();
    std::ostringstream case_out, case_err;
    const int code = run(args, case_out, case_err);
    std::string problem;
    if (const int want = c.value("exit", 0); code != want) {
      problem = "exit " + std::to_string(code) + ", expected " + std::to_string(want);
    } else if (c.contains("expect") || c.contains("expect_profiles")) {
      json got;
      try {
        got = json::parse(case_out.str());
      } catch (const json::exception&) {
        problem = "output is not JSON";
      }
      if (problem.empty() && c.contains("expect")) {
        for (const auto& [key, value] : c["expect"].items()) {
          if (!got.contains(key)) {
            problem = "missing key '" + key + "'";
            break;
          }
          if (got[key] != value) {
            problem = key + " = " + got[key].dump() + ", expected " + value.dump();
            break;
          }
        }
      }
      if (problem.empty() && c.contains("expect_profiles")) {
        // Expected profiles may be listed in any orientation.
        const Family family = parse_family(got.value("family", "path"));
        std::vector<Profile> want, have;
        for (const auto& p : c["expect_profiles"]) {
          Profile q(p.get<std::vector<int>>());
          want.push_back(family == Family::path ? canonical_path_profile(q)
                                                : canonical_cycle_profile(q));
        }
        for (const auto& p : got.at("profiles")) have.emplace_back(p.get<std::vector<int>>());
        std::sort(want.begin(), want.end());
        std::sort(have.begin(), have.end());
        if (want != have) problem = "profile set differs from the expected list";
      }
    }
    if (problem.empty() && c.contains("stdout_contains") &&
        case_out.str().find(c["stdout_contains"].get<std::string>()) == std::string::npos)
      problem = "stdout lacks '" + c["stdout_contains"].get<std::string>() + "'";
    if (problem.empty()) {
      ++passed;
      out << "PASS " << name << '\n';
    } else {
      ++failed;
      out << "FAIL " << name << ": " << problem << '\n';
    }
  }
  out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kSuccess : kInfeasible;
}

}  // namespace rhor::cli
