#pragma once

// Text forms for profiles, host graphs and colorings.
//
//   profile   "1,2,2,2,3"; profile files hold one per line, '#' starts a comment
//   graph     "n m" then m lines "u v" (0-indexed), or a shorthand:
//             path:N  cycle:N  doublestar:A,B  anticlique:N  complete:N
//   coloring  one color id per line, in deterministic vertex numbering

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rhor/graph.hpp"

namespace rhor {

Profile parse_profile(std::string_view text);
std::string format_profile(const Profile& p);
std::vector<Profile> read_profiles(std::istream& in);

HostGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const HostGraph& g);

/// Shorthand, or "@path" to read a graph file.
HostGraph parse_graph_spec(std::string_view spec);

ColoringAssignment read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const ColoringAssignment& c);

}  // namespace rhor
