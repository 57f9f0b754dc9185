#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "canonical.hpp"
#include "doctest.h"
#include "families.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using md::Graph;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("codes are invariant under relabeling") {
  Graph p3a = Graph::path(3);
  Graph p3b(3);
  p3b.add_edge(2, 0);
  p3b.add_edge(0, 1);  // path 2-0-1
  CHECK(md::canonical_form(p3a) == md::canonical_form(p3b));
  CHECK(md::canonical_form(Graph::complete(3)) != md::canonical_form(p3a));

  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + int(rng() % 16);
    Graph g = random_graph(rng, n, 0.1 + 0.8 * double(rng() % 100) / 100.0);
    Graph h = g.permuted(random_permutation(rng, n));
    CHECK(md::canonical_form(g) == md::canonical_form(h));
  }
}

TEST_CASE("codes separate all small isomorphism classes") {
  // group all labeled graphs by code; totals must match the known counts
  const long long expected[] = {1, 1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> codes;
    for (const Graph& g : md::oracle::all_labeled_graphs(n))
      codes.insert(md::canonical_form(g));
    CHECK((long long)codes.size() == expected[n]);
  }
}

TEST_CASE("three-vertex classes get four distinct codes") {
  std::set<std::string> codes;
  for (const Graph& g : md::oracle::all_labeled_graphs(3))
    codes.insert(md::canonical_form(g));
  CHECK(codes.size() == 4);
}

TEST_CASE("canonical relabel reproduces the code and a stable graph6") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng() % 10);
    Graph g = random_graph(rng, n, 0.5);
    Graph canon = md::canonical_relabel(g);
    CHECK(md::canonical_form(canon) == md::canonical_form(g));
    Graph shuffled = g.permuted(random_permutation(rng, n));
    CHECK(md::emit_graph6(md::canonical_relabel(shuffled)) ==
          md::emit_graph6(canon));
  }
}

TEST_CASE("highly symmetric graphs stay fast and correct") {
  CHECK(md::canonical_form(Graph::complete(13)) ==
        md::canonical_form(Graph::complete(13).permuted({12, 3, 7, 0, 1, 2, 4, 5, 6, 8, 9, 10, 11})));
  Graph c12 = Graph::cycle(12);
  std::mt19937_64 rng(9);
  CHECK(md::canonical_form(c12) == md::canonical_form(c12.permuted(random_permutation(rng, 12))));
  Graph kb = Graph::complete_bipartite(6, 6);
  CHECK(md::canonical_form(kb) == md::canonical_form(kb.permuted(random_permutation(rng, 12))));
  CHECK(md::canonical_form(kb) != md::canonical_form(c12));
}

TEST_CASE("marked codes distinguish orbits") {
  // path on 4: the two ends share an orbit, the two middles share an orbit
  Graph p4 = Graph::path(4);
  CHECK(md::canonical_form_marked(p4, 0) == md::canonical_form_marked(p4, 3));
  CHECK(md::canonical_form_marked(p4, 1) == md::canonical_form_marked(p4, 2));
  CHECK(md::canonical_form_marked(p4, 0) != md::canonical_form_marked(p4, 1));
  // marked codes respect relabeling
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + int(rng() % 8);
    Graph g = random_graph(rng, n, 0.5);
    auto perm = random_permutation(rng, n);
    Graph h = g.permuted(perm);
    int v = int(rng() % n);
    // h's vertex i is g's vertex perm[i]
    CHECK(md::canonical_form_marked(h, v) == md::canonical_form_marked(g, perm[v]));
  }
}

TEST_CASE("empty and tiny graphs") {
  CHECK(md::canonical_form(Graph(0)).size() == 1);
  CHECK(md::canonical_form(Graph(1)) == md::canonical_form(Graph(1)));
  CHECK(md::canonical_form(Graph(1)) != md::canonical_form(Graph(2)));
}
