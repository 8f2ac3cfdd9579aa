#include "rhor/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rhor/constructions.hpp"
#include "rhor/errors.hpp"

namespace rhor {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(line.substr(0, hash));
}

}  // namespace

Profile parse_profile(std::string_view text) {
  auto orders = parse_int_list(text, "profile entry");
  for (int x : orders)
    if (x < 1) throw ParseError("profile entries must be positive");
  return Profile(std::move(orders));
}

std::string format_profile(const Profile& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::vector<Profile> read_profiles(std::istream& in) {
  std::vector<Profile> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto body = strip_comment(line);
    if (!body.empty()) out.push_back(parse_profile(body));
  }
  return out;
}

HostGraph read_graph(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    const auto body = strip_comment(line);
    if (!body.empty()) lines.emplace_back(body);
  }
  if (lines.empty()) throw ParseError("graph file is empty");
  std::istringstream header(lines[0]);
  int n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("graph header must be 'n m'");
  if (static_cast<int>(lines.size()) != m + 1)
    throw ParseError("graph header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  HostGraph g(n);
  for (int i = 1; i <= m; ++i) {
    std::istringstream row(lines[i]);
    int u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw ParseError("bad edge line: '" + lines[i] + "'");
    try {
      g.add_edge(u, v);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return g;
}

void write_graph(std::ostream& out, const HostGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

HostGraph parse_graph_spec(std::string_view spec) {
  spec = trim(spec);
  if (!spec.empty() && spec.front() == '@') {
    const std::string path(spec.substr(1));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file " + path);
    return read_graph(in);
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown graph spec '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto args = spec.substr(colon + 1);
  if (kind == "doublestar") {
    const auto ab = parse_int_list(args, "double star size");
    if (ab.size() != 2) throw ParseError("doublestar expects A,B");
    return double_star_graph(DoubleStarSpec(ab[0], ab[1]));
  }
  const int n = parse_int(args, "vertex count");
  if (n < 0) throw ParseError("negative vertex count");
  if (kind == "path") return HostGraph::path(n);
  if (kind == "cycle") {
    if (n < 3) throw ParseError("cycle needs at least 3 vertices");
    return HostGraph::cycle(n);
  }
  if (kind == "anticlique") return HostGraph::anticlique(n);
  if (kind == "complete") return HostGraph::complete(n);
  throw ParseError("unknown graph family '" + std::string(kind) + "'");
}

ColoringAssignment read_coloring(std::istream& in) {
  ColoringAssignment c;
  std::string line;
  while (std::getline(in, line)) {
    const auto body = strip_comment(line);
    if (body.empty()) continue;
    const int color = parse_int(body, "color id");
    if (color < 0) throw ParseError("color ids must be nonnegative");
    c.colors.push_back(color);
  }
  return c;
}

void write_coloring(std::ostream& out, const ColoringAssignment& c) {
  for (int x : c.colors) out << x << '\n';
}

}  // namespace rhor
