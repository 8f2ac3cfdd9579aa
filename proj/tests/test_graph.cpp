#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rhor/errors.hpp"
#include "rhor/graph.hpp"
#include "rhor/io.hpp"

using namespace rhor;

TEST_CASE("replicate small hosts") {
  CHECK(replicate(HostGraph::path(2), Profile{2, 2}) == HostGraph::complete(4));
  CHECK(replicate(HostGraph::path(3), Profile{1, 1, 1}) == HostGraph::path(3));

  // a | m1 m2 | c1 c2 c3
  const HostGraph g = replicate(HostGraph::path(3), Profile{1, 2, 3});
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 0 + 1 + 3 + 2 + 6);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 5));
  CHECK(g.adjacent(3, 4));

  CHECK_THROWS_AS(replicate(HostGraph::path(3), Profile{1, 2}), DimensionError);
}

TEST_CASE("replicate counts") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    HostGraph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) h.add_edge(u, v);
    std::vector<int> orders(n);
    for (int& x : orders) x = 1 + static_cast<int>(rng() % 4);
    const Profile p(orders);
    const HostGraph g = replicate(h, p);
    int64_t edges = 0;
    for (int x : orders) edges += int64_t{x} * (x - 1) / 2;
    for (auto [u, v] : h.edges()) edges += int64_t{orders[u]} * orders[v];
    CHECK(g.vertex_count() == p.total());
    CHECK(g.edge_count() == edges);
    CHECK(replicate(h, Profile(std::vector<int>(n, 1))) == h);
  }
}

TEST_CASE("host graph validation") {
  HostGraph h(3);
  h.add_edge(0, 1);
  CHECK_THROWS_AS(h.add_edge(1, 0), DomainError);
  CHECK_THROWS_AS(h.add_edge(2, 2), DomainError);
  CHECK_THROWS_AS(h.add_edge(0, 3), DomainError);
  CHECK_THROWS_AS(Profile({1, 0, 2}), DomainError);
  CHECK(HostGraph::cycle(5).edge_count() == 5);
  CHECK(HostGraph::anticlique(4).edge_count() == 0);
}

TEST_CASE("canonical path profile") {
  CHECK(canonical_path_profile(Profile{3, 2, 2, 2, 1}) == Profile{1, 2, 2, 2, 3});
  CHECK(canonical_path_profile(Profile{1, 2, 2, 2, 3}) == Profile{1, 2, 2, 2, 3});
  CHECK(canonical_path_profile(Profile{3, 1, 1, 2, 3}) == Profile{3, 1, 1, 2, 3});
}

TEST_CASE("canonical cycle profile") {
  CHECK(canonical_cycle_profile(Profile{2, 1, 2, 1}) == Profile{1, 2, 1, 2});
  CHECK(canonical_cycle_profile(Profile{1, 1, 2, 2}) == Profile{1, 1, 2, 2});
  CHECK(canonical_cycle_profile(Profile{2, 2, 1, 1}) == Profile{1, 1, 2, 2});
  CHECK_THROWS_AS(canonical_cycle_profile(Profile{1, 2}), DimensionError);
}

TEST_CASE("canonical forms are idempotent and symmetry invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    std::vector<int> orders(n);
    for (int& x : orders) x = 1 + static_cast<int>(rng() % 4);
    const Profile p(orders);

    const Profile cp = canonical_path_profile(p);
    CHECK(cp.orders() == oracle::canonical(orders, false));
    CHECK(canonical_path_profile(cp) == cp);
    CHECK(canonical_path_profile(p.reversed()) == cp);

    const Profile cc = canonical_cycle_profile(p);
    CHECK(cc.orders() == oracle::canonical(orders, true));
    CHECK(canonical_cycle_profile(cc) == cc);
    const int r = static_cast<int>(rng() % n);
    std::vector<int> rotated(n);
    for (int i = 0; i < n; ++i) rotated[i] = orders[(i + r) % n];
    CHECK(canonical_cycle_profile(Profile(rotated)) == cc);
    CHECK(canonical_cycle_profile(Profile(rotated).reversed()) == cc);
  }
}

TEST_CASE("validate coloring") {
  const HostGraph k2 = HostGraph::complete(2);
  CHECK(validate_coloring(k2, {{0, 1}}));
  CHECK_FALSE(validate_coloring(k2, {{0, 0}}));
  CHECK_THROWS_AS(validate_coloring(k2, {{0}}), DimensionError);
  CHECK_THROWS_AS(validate_coloring(k2, {{0, -1}}), DomainError);
  // a=1, m=(2,3), c=(1,4,5)
  CHECK(validate_coloring(replicate(HostGraph::path(3), Profile{1, 2, 3}), {{1, 2, 3, 1, 4, 5}}));
}

TEST_CASE("replication layout") {
  const ReplicationLayout layout(Profile{1, 2, 3});
  CHECK(layout.vertex_count() == 6);
  CHECK(layout.index({2, 1}) == 4);
  CHECK(layout.vertex(3) == ReplicationVertex{2, 0});
  CHECK_THROWS_AS(layout.index({1, 2}), DimensionError);
}

TEST_CASE("profile text round trip") {
  const Profile p{1, 8, 5, 4, 2, 8, 6, 4, 3, 8, 7, 4, 4, 8, 8, 8};
  CHECK(parse_profile(format_profile(p)) == p);
  CHECK(parse_profile(" 1, 2 ,3 ") == Profile{1, 2, 3});
  CHECK_THROWS_AS(parse_profile("1,0"), ParseError);
  CHECK_THROWS_AS(parse_profile("1,x"), ParseError);
  CHECK_THROWS_AS(parse_profile("1,,2"), ParseError);

  std::istringstream in("# minimal P_5\n1,2,2,2,3\n\n3,1,1,2,3  # last\n");
  const auto ps = read_profiles(in);
  REQUIRE(ps.size() == 2);
  CHECK(ps[1] == Profile{3, 1, 1, 2, 3});
}

TEST_CASE("graph text round trip") {
  const HostGraph c5 = HostGraph::cycle(5);
  std::stringstream buf;
  write_graph(buf, c5);
  CHECK(read_graph(buf) == c5);

  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(bad), ParseError);
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_graph(loop), ParseError);
}

TEST_CASE("graph specs") {
  CHECK(parse_graph_spec("path:4") == HostGraph::path(4));
  CHECK(parse_graph_spec("cycle:5") == HostGraph::cycle(5));
  CHECK(parse_graph_spec("anticlique:3") == HostGraph::anticlique(3));
  CHECK(parse_graph_spec("complete:4") == HostGraph::complete(4));
  CHECK(parse_graph_spec("doublestar:1,1") == HostGraph::path(4));
  CHECK(parse_graph_spec("doublestar:2,3").vertex_count() == 7);
  CHECK_THROWS_AS(parse_graph_spec("tree:4"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("cycle:2"), ParseError);
  CHECK_THROWS_AS(parse_graph_spec("doublestar:3,1"), Error);
}

TEST_CASE("coloring text round trip") {
  const ColoringAssignment c{{1, 2, 3, 1, 4, 5}};
  std::stringstream buf;
  write_coloring(buf, c);
  CHECK(read_coloring(buf).colors == c.colors);
  std::istringstream bad("1\n-2\n");
  CHECK_THROWS_AS(read_coloring(bad), ParseError);
}
