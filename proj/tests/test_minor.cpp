#include <random>
#include <set>

#include "canonical.hpp"
#include "doctest.h"
#include "families.hpp"
#include "graph.hpp"
#include "minor.hpp"
#include "oracles.hpp"

using md::BalanceMode;
using md::Graph;
using md::MinorOp;
using md::Rational;

namespace {

Graph diamond() {
  Graph g = Graph::complete(4);
  g.remove_edge(0, 1);
  return g;
}

// K_4 with the edge 0-1 subdivided through a new vertex 4
Graph subdivided_k4() {
  Graph g(5);
  g.add_edge(0, 4);
  g.add_edge(4, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return g;
}

bool iso(const Graph& a, const Graph& b) {
  return md::canonical_form(a) == md::canonical_form(b);
}

// every 2-tree on up to max_n vertices, one per isomorphism class
std::vector<Graph> two_trees_up_to(int max_n) {
  std::vector<Graph> current{Graph::complete(2)};
  std::vector<Graph> all{Graph::complete(2)};
  for (int n = 3; n <= max_n; ++n) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const Graph& g : current)
      for (auto [u, v] : g.edges()) {
        Graph h(g.n() + 1);
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        h.add_edge(g.n(), u);
        h.add_edge(g.n(), v);
        if (seen.insert(md::canonical_form(h)).second) next.push_back(h);
      }
    all.insert(all.end(), next.begin(), next.end());
    current = std::move(next);
  }
  return all;
}

}  // namespace

TEST_CASE("apply_minor_op") {
  Graph k3 = Graph::complete(3);
  CHECK(iso(md::apply_minor_op(k3, MinorOp::contract(0, 1)), Graph::complete(2)));

  Graph d = diamond();  // degree-2 vertices are 0 and 1
  CHECK(iso(md::apply_minor_op(d, MinorOp::del_vertex(0)), Graph::complete(3)));

  Graph s = subdivided_k4();
  CHECK(iso(md::apply_minor_op(s, MinorOp::contract(0, 4)), Graph::complete(4)));

  CHECK_THROWS_AS(md::apply_minor_op(d, MinorOp::contract(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(md::apply_minor_op(d, MinorOp::del_edge(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(md::apply_minor_op(d, MinorOp::del_vertex(9)), std::invalid_argument);
  Graph e = md::apply_minor_op(d, MinorOp::del_edge(2, 3));
  CHECK(e.edge_count() == 4);
}

TEST_CASE("densest_minor examples") {
  auto sub = md::densest_minor(subdivided_k4());
  CHECK(sub.rho == Rational(3, 2));
  CHECK(iso(sub.minor, Graph::complete(4)));
  CHECK(!sub.ops.empty());

  auto k5 = md::densest_minor(Graph::complete(5));
  CHECK(k5.rho == Rational(2));
  CHECK(iso(k5.minor, Graph::complete(5)));
  CHECK(k5.ops.empty());

  auto p4 = md::densest_minor(Graph::path(4));
  CHECK(p4.rho == Rational(3, 4));
  CHECK(iso(p4.minor, Graph::path(4)));
}

TEST_CASE("densest_minor agrees with the full-closure oracle up to n=5") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : md::oracle::all_labeled_graphs(n)) {
      Rational full = md::oracle::densest_minor_density(g);
      CHECK(md::densest_minor(g).rho == full);
      CHECK(md::oracle::densest_minor_density_no_edge_delete(g) == full);
    }
}

TEST_CASE("densest_minor replays its op sequence") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + int(rng() % 7);
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double p = coin(rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) g.add_edge(u, v);
    auto result = md::densest_minor(g);
    Graph replay = g;
    for (const MinorOp& op : result.ops) replay = md::apply_minor_op(replay, op);
    CHECK(replay == result.minor);
    CHECK(md::density(replay) == result.rho);
  }
}

TEST_CASE("balance_check examples") {
  CHECK(md::balance_check(Graph::complete(5), {BalanceMode::StrictlyMinorBalanced, 0}).verdict);

  auto report = md::balance_check(subdivided_k4(), {BalanceMode::MinorBalanced, 0});
  CHECK(!report.verdict);
  REQUIRE(report.counterexample.has_value());
  CHECK(iso(report.counterexample->minor, Graph::complete(4)));
  CHECK(report.counterexample->value == Rational(3, 2));
  // the recorded op sequence reproduces the counterexample exactly
  Graph replay = subdivided_k4();
  for (const MinorOp& op : report.counterexample->ops)
    replay = md::apply_minor_op(replay, op);
  CHECK(replay == report.counterexample->minor);

  for (const Graph& tt : two_trees_up_to(7))
    CHECK(md::balance_check(tt, {BalanceMode::StrictlyMinorBalanced, 0}).verdict);
}

TEST_CASE("balance_check against the closure oracle at n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : md::oracle::all_labeled_graphs(n)) {
      Rational rho = md::density(g);
      Rational best = md::oracle::densest_minor_density(g);
      bool balanced = md::balance_check(g, {BalanceMode::MinorBalanced, 0}).verdict;
      CHECK(balanced == (best <= rho));
    }
}

TEST_CASE("t-mode positivity failure") {
  auto report = md::balance_check(Graph::complete(2), {BalanceMode::TMinorBalanced, 2});
  CHECK(!report.verdict);
  CHECK(report.positivity_failed);
  CHECK(!report.counterexample.has_value());
}

TEST_CASE("extension lemma sweep at n <= 5") {
  // a t-minor-balanced graph's one-vertex extension is (t+1)-minor-balanced
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : md::oracle::all_labeled_graphs(n))
      for (int t = 0; t <= 1; ++t) {
        if (!md::balance_check(g, {BalanceMode::TMinorBalanced, t}).verdict) continue;
        CHECK(md::balance_check(md::extend(g), {BalanceMode::TMinorBalanced, t + 1}).verdict);
      }
}

TEST_CASE("budget exhaustion is an error, not a verdict") {
  md::SearchOptions opts;
  opts.budget = 3;
  CHECK_THROWS_AS(md::balance_check(md::build_gkm(2, 7), {BalanceMode::MinorBalanced, 0}, opts),
                  md::BudgetExceeded);
  CHECK_THROWS_AS(md::densest_minor(md::build_gkm(2, 7), opts), md::BudgetExceeded);
}

TEST_CASE("memo eviction never changes verdicts") {
  md::SearchOptions tiny;
  tiny.memo_capacity = 16;
  Graph g = md::build_star_of_plants(3, 2, 1);
  auto a = md::balance_check(g, {BalanceMode::StrictlyMinorBalanced, 0});
  auto b = md::balance_check(g, {BalanceMode::StrictlyMinorBalanced, 0}, tiny);
  CHECK(a.verdict == b.verdict);
  auto da = md::densest_minor(g);
  auto db = md::densest_minor(g, tiny);
  CHECK(da.rho == db.rho);
  CHECK(md::canonical_form(da.minor) == md::canonical_form(db.minor));
}

TEST_CASE("is_minor examples and certificates") {
  auto c1 = md::is_minor(Graph::complete(4), Graph::complete(5));
  REQUIRE(c1.has_value());
  CHECK(md::certificate_valid(*c1, Graph::complete(4), Graph::complete(5)));

  CHECK(!md::is_minor(Graph::complete(4), Graph::path(6)).has_value());
  CHECK(!md::is_minor(Graph::complete(4), Graph::complete_bipartite(1, 5)).has_value());

  Graph h11 = md::build_fan_cliques(1, 1);
  auto c2 = md::is_minor(Graph::complete(4), h11);
  REQUIRE(c2.has_value());
  CHECK(md::certificate_valid(*c2, Graph::complete(4), h11));

  // C5 contracts to a triangle
  auto c3 = md::is_minor(Graph::complete(3), Graph::cycle(5));
  REQUIRE(c3.has_value());
  CHECK(md::certificate_valid(*c3, Graph::complete(3), Graph::cycle(5)));
}

TEST_CASE("is_minor agrees with the closure oracle at n <= 5") {
  std::mt19937_64 rng(17);
  std::vector<Graph> patterns = {Graph::complete(3), Graph::path(3), Graph::complete(4),
                                 Graph::cycle(4), Graph::complete_bipartite(1, 3)};
  for (int n = 1; n <= 5; ++n) {
    auto hosts = md::oracle::all_labeled_graphs(n);
    for (const Graph& g : hosts) {
      if (rng() % 4 != 0) continue;  // sample to keep runtime small
      for (const Graph& h : patterns) {
        auto cert = md::is_minor(h, g);
        CHECK(cert.has_value() == md::oracle::is_minor_naive(h, g));
        if (cert) CHECK(md::certificate_valid(*cert, h, g));
      }
    }
  }
}

TEST_CASE("in_ex_class") {
  CHECK(!md::in_ex_class(Graph::cycle(5), {Graph::complete(3)}));
  // path forests with small components avoid the claw, triangle and P4
  Graph forest = Graph::path(3).disjoint_union(Graph::path(2));
  std::vector<Graph> excluded = {Graph::cycle(3), Graph::complete_bipartite(1, 3),
                                 Graph::path(4)};
  CHECK(md::in_ex_class(forest, excluded));
  CHECK(md::in_ex_class(Graph::complete(4),
                        {Graph::complete(5), Graph::complete_bipartite(3, 3)}));
  CHECK_THROWS_AS(md::in_ex_class(forest, {}), std::invalid_argument);
}

TEST_CASE("certificate validation rejects corrupted certificates") {
  auto cert = md::is_minor(Graph::complete(3), Graph::cycle(5));
  REQUIRE(cert.has_value());
  auto broken = *cert;
  broken.branch_sets[0].clear();
  CHECK(!md::certificate_valid(broken, Graph::complete(3), Graph::cycle(5)));
  broken = *cert;
  broken.edge_witnesses[0][2] = broken.edge_witnesses[0][3];
  CHECK(!md::certificate_valid(broken, Graph::complete(3), Graph::cycle(5)));
}
