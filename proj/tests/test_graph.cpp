#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "families.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using md::Graph;
using md::Rational;

namespace {

Graph diamond() {
  Graph g = Graph::complete(4);
  g.remove_edge(0, 1);
  return g;
}

}  // namespace

TEST_CASE("density") {
  CHECK(md::density(Graph::complete(5)) == Rational(2));
  CHECK(md::density(Graph(1)) == Rational(0));
  CHECK(md::density(diamond()) == Rational(5, 4));
  CHECK_THROWS_AS(md::density(Graph(0)), std::domain_error);
}

TEST_CASE("t_density") {
  CHECK(md::t_density(Graph::complete(4), 1) == Rational(2));
  CHECK(md::t_density(Graph::complete(3), 1) == Rational(3, 2));
  CHECK(md::t_density(Graph::complete(2), 2) == Rational(0));  // convention case
  CHECK(md::t_density(Graph(3), 0) == Rational(0));
  CHECK(md::t_density(Graph::complete(5), 4) == Rational(4));
  CHECK_THROWS_AS(md::t_density(Graph(1), -1), std::invalid_argument);
}

TEST_CASE("t_density exceeds density once there is an edge") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : md::oracle::all_labeled_graphs(n))
      if (g.edge_count() > 0) CHECK(md::t_density(g, 1) > md::density(g));
}

TEST_CASE("rho1 block convexity for connected graphs") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : md::oracle::all_labeled_graphs(n)) {
      if (!md::is_connected(g)) continue;
      Rational whole = md::t_density(g, 1);
      bool first = true;
      Rational lo, hi;
      for (const auto& blk : md::blocks(g)) {
        uint64_t mask = 0;
        for (int v : blk) mask |= md::bit(v);
        Rational val = md::t_density(g.induced(mask), 1);
        if (first || val < lo) lo = val;
        if (first || val > hi) hi = val;
        first = false;
      }
      CHECK(lo <= whole);
      CHECK(whole <= hi);
      if (g.edge_count() > 0) CHECK(md::density(g) < whole);
    }
}

TEST_CASE("connectivity") {
  CHECK(md::connectivity(Graph::complete(4)) == 3);
  CHECK(md::connectivity(Graph::path(4)) == 1);
  CHECK(md::connectivity(Graph::cycle(5)) == 2);
  CHECK(md::connectivity(Graph(1)) == 0);
  CHECK(md::connectivity(Graph(3)) == 0);  // disconnected
  CHECK(md::connectivity(Graph::complete_bipartite(3, 3)) == 3);
  Graph two_tri = md::build_star_of_plants(2, 2, 0);
  CHECK(md::connectivity(two_tri) == 1);  // bowtie has a cut vertex
}

TEST_CASE("blocks") {
  Graph bow = md::build_star_of_plants(2, 2, 0);
  auto bb = md::blocks(bow);
  REQUIRE(bb.size() == 2);
  CHECK(bb[0].size() == 3);
  CHECK(bb[1].size() == 3);

  auto pb = md::blocks(Graph::path(3));
  REQUIRE(pb.size() == 2);
  CHECK(pb[0].size() == 2);
  CHECK(pb[1].size() == 2);

  Graph star = md::build_star_of_plants(3, 4, 0);  // 13-vertex star of 4 diamonds
  auto sb = md::blocks(star);
  REQUIRE(sb.size() == 4);
  for (const auto& blk : sb) {
    uint64_t mask = 0;
    for (int v : blk) mask |= md::bit(v);
    Graph sub = star.induced(mask);
    CHECK(sub.n() == 4);
    CHECK(sub.edge_count() == 5);
  }

  // block edges cover the whole edge set; isolated vertices are singletons
  Graph mix(5);
  mix.add_edge(0, 1);
  mix.add_edge(1, 2);
  mix.add_edge(0, 2);
  auto mb = md::blocks(mix);
  REQUIRE(mb.size() == 3);
  CHECK(mb[0] == std::vector<int>{0, 1, 2});
  CHECK(mb[1] == std::vector<int>{3});
  CHECK(mb[2] == std::vector<int>{4});
}

TEST_CASE("clique number") {
  CHECK(md::clique_number(Graph::complete(5)) == 5);
  CHECK(md::clique_number(Graph::cycle(5)) == 2);
  CHECK(md::clique_number(Graph(4)) == 1);
  // the matching-plus-triangles layer keeps its triangles joined to the base
  // clique, so the maximum lives there
  Graph g27 = md::build_gkm(2, 7);
  int naive = md::oracle::clique_number_naive(g27);
  CHECK(md::clique_number(g27) == naive);
  CHECK(naive == 5);
}

TEST_CASE("graph6 round trips") {
  CHECK(md::emit_graph6(Graph(1)) == "@");
  CHECK(md::emit_graph6(Graph(0)) == "?");
  Graph k4 = Graph::complete(4);
  CHECK(md::parse_graph6(md::emit_graph6(k4)) == k4);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : md::oracle::all_labeled_graphs(n))
      CHECK(md::parse_graph6(md::emit_graph6(g)) == g);
}

TEST_CASE("graph6 long form for 63 and 64 vertices") {
  for (int n : {63, 64}) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n - 1);
    Graph back = md::parse_graph6(md::emit_graph6(g));
    CHECK(back == g);
  }
}

TEST_CASE("graph6 malformed inputs") {
  CHECK_THROWS_AS(md::parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(md::parse_graph6("D"), std::invalid_argument);      // truncated
  CHECK_THROWS_AS(md::parse_graph6("D~{~"), std::invalid_argument);   // too long
  CHECK_THROWS_AS(md::parse_graph6("C\x1f"), std::invalid_argument);  // bad char
  CHECK_THROWS_AS(md::parse_graph6("B integrity"), std::invalid_argument);
  // 8-byte order marker
  CHECK_THROWS_AS(md::parse_graph6("~~?????"), std::invalid_argument);
}

TEST_CASE("graph6 stream reading") {
  std::istringstream in(">>graph6<<D~{\nC~\n\n@\n");
  auto graphs = md::read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == Graph::complete(5));
  CHECK(graphs[1] == Graph::complete(4));
  CHECK(graphs[2] == Graph(1));
}

TEST_CASE("capacity is enforced") {
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  Graph g(2);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
}
