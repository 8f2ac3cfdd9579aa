#pragma once

// rho-r <verb> <target> [options]
//
//   verify      <target> --profile P [--mode chromatic|clique]
//   construct   path-ub N | double-star A B | anticlique N
//   bounds      path N [--params a',a,b,c,d] [--as-stated]
//   search      path|cycle N [--budget B] [--no-prune] [--disable LIST]
//               [--threads T] [--cache FILE] [--no-cache] [--recompute]
//   conjectures --max N
//   rainbow     <target> --profile P (--coloring FILE | --random) [--seed S]
//   badcolor    <target> --profile P [--subset i,j,...]
//   suite       MANIFEST
//
// Targets: path:N cycle:N doublestar:A,B anticlique:N complete:N @file, or a
// bare family name (path, cycle, anticlique, complete) sized by the profile.
// Every verb accepts --json.

#include <iosfwd>
#include <string>
#include <vector>

namespace rhor::cli {

enum ExitCode : int {
  kSuccess = 0,     ///< feasible / completed
  kInfeasible = 1,  ///< witness or deficient Hall set printed
  kUsage = 2,       ///< bad arguments or parameters
  kResource = 3,    ///< cap or budget exhausted
};

/// Runs one command. `args` excludes the program name. Errors are reported
/// on `err` as a single line "rho-r: <kind>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a JSON manifest of commands and expected outputs; prints one
/// line per case and a summary. Exit 0 iff every case passes.
int run_suite(const std::string& manifest_path, std::ostream& out, std::ostream& err);

/// Default search cache: $RHO_R_CACHE, else $XDG_CACHE_HOME/rho-r/search.jsonl,
/// else ~/.cache/rho-r/search.jsonl. Empty when none can be determined.
std::string default_cache_path();

}  // namespace rhor::cli
