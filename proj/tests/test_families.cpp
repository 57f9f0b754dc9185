#include <random>

#include "canonical.hpp"
#include "doctest.h"
#include "families.hpp"
#include "graph.hpp"
#include "minor.hpp"

using md::FamilySpec;
using md::Graph;
using md::Rational;

namespace {

bool iso(const Graph& a, const Graph& b) {
  return md::canonical_form(a) == md::canonical_form(b);
}

Graph diamond() {
  Graph g = Graph::complete(4);
  g.remove_edge(0, 1);
  return g;
}

Graph bowtie() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(3, 4);
  return g;
}

}  // namespace

TEST_CASE("G family") {
  Graph g0 = md::build_gkm(2, 0);
  CHECK(g0.n() == 10);
  CHECK(g0.edge_count() == 17);
  CHECK(md::density(g0) == Rational(17, 10));

  Graph g7 = md::build_gkm(2, 7);
  CHECK(g7.n() == 10);
  CHECK(g7.edge_count() == 24);
  CHECK(md::density(g7) == Rational(12, 5));

  CHECK(md::density(md::build_gkm(2, 3)) == Rational(2));

  CHECK_THROWS_AS(md::build_gkm(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(md::build_gkm(2, 9), std::invalid_argument);  // 9-4 not divisible by 3
  CHECK_THROWS_AS(md::build_gkm(2, 11), std::invalid_argument);  // beyond n
}

TEST_CASE("F family") {
  Graph f29 = md::build_fkm(2, 9);
  CHECK(f29.n() == 11);
  CHECK(f29.edge_count() == 28);

  CHECK(iso(md::build_fkm(2, 3), Graph::complete(5)));

  Graph f36 = md::build_fkm(3, 6);
  CHECK(f36.n() == 9);
  CHECK(f36.edge_count() == 27);
  CHECK(md::density(f36) == Rational(3));

  CHECK_THROWS_AS(md::build_fkm(2, 7), std::invalid_argument);
  CHECK_THROWS_AS(md::build_fkm(2, 0), std::invalid_argument);
}

TEST_CASE("star of plants") {
  CHECK(iso(md::build_star_of_plants(2, 2, 0), bowtie()));
  CHECK(iso(md::build_star_of_plants(2, 1, 1), diamond()));
  Graph s = md::build_star_of_plants(3, 4, 0);
  CHECK(s.n() == 13);
  CHECK(s.edge_count() == 20);
  CHECK(md::density(s) == Rational(20, 13));
  CHECK(md::blocks(s).size() == 4);
  CHECK_THROWS_AS(md::build_star_of_plants(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(md::build_star_of_plants(2, 0, 0), std::invalid_argument);
}

TEST_CASE("K plus 2a") {
  CHECK(iso(md::build_k_plus_2a(1), Graph::complete(3)));
  CHECK(iso(md::build_k_plus_2a(2), diamond()));
  Graph k = md::build_k_plus_2a(4);  // 3k-5 at k=3
  CHECK(k.n() == 6);
  CHECK(k.edge_count() == 9);
  CHECK(md::density(k) == Rational(3, 2));
}

TEST_CASE("fan cliques") {
  Graph h32 = md::build_fan_cliques(3, 2);
  CHECK(h32.n() == 20);
  CHECK(h32.edge_count() == 45);

  CHECK(md::t_density(md::build_fan_cliques(3, 1), 1) == Rational(25, 11));

  Graph h11 = md::build_fan_cliques(1, 1);
  CHECK(h11.n() == 6);
  CHECK(h11.edge_count() == 11);

  CHECK(iso(md::build_fan_cliques(0, 3), Graph::complete(4)));

  // the degenerate cases still satisfy the shared vertex/edge counts
  for (int k = 1; k <= 4; ++k)
    for (int t = 1; t <= 3; ++t) {
      Graph h = md::build_fan_cliques(k, t);
      CHECK(h.n() == (k + 1) * (2 * t + 1));
      CHECK(h.edge_count() == (k + 1) * (5 * t + 2) - 3);
    }
}

TEST_CASE("bowtie star") {
  Graph h1 = md::build_bowtie_star(1);
  CHECK(h1.n() == 6);
  CHECK(h1.edge_count() == 11);
  CHECK(md::density(md::build_bowtie_star(2)) == Rational(2));
  CHECK(md::density(md::build_bowtie_star(3)) == Rational(33, 16));
}

TEST_CASE("clique star") {
  Graph c = md::build_clique_star(4, 2, 3);
  CHECK(c.n() == 7);
  CHECK(c.edge_count() == 9);
  CHECK(md::density(c) == Rational(9, 7));
  auto blks = md::blocks(c);
  CHECK(blks.size() == 3);

  CHECK(iso(md::build_clique_star(5, 2, 1), Graph::complete(4)));

  // t = 1 means disjoint cliques
  Graph d = md::build_clique_star(4, 1, 3);
  CHECK(d.n() == 9);
  CHECK(d.edge_count() == 9);
  CHECK(!md::is_connected(d));

  // the density tends to (h+t-3)/2 from below
  Rational limit(5 + 3 - 3, 2);
  Rational prev(0);
  for (long long m = 1; m <= 8; ++m) {
    Rational rho = md::closed_form(FamilySpec::clique_star(5, 3, m)).rho;
    CHECK(rho < limit);
    CHECK(rho >= prev);
    prev = rho;
  }
}

TEST_CASE("extend") {
  CHECK(iso(md::extend(Graph(1)), Graph::complete(2)));
  Graph fan = md::extend(Graph::path(4));
  CHECK(fan.n() == 5);
  CHECK(fan.edge_count() == 7);
  // extension identity for the 1-density
  CHECK(md::t_density(fan, 1) == md::density(Graph::path(4)) + Rational(1));
}

TEST_CASE("witness 25/11") {
  Graph w = md::build_witness_25_11();
  CHECK(w.n() == 11);
  CHECK(w.edge_count() == 25);
  CHECK(md::density(w) == Rational(25, 11));
  CHECK(md::t_density(w, 1) == Rational(5, 2));
  Graph base = w.delete_vertex(10);
  CHECK(md::density(base) == Rational(3, 2));
}

TEST_CASE("k_sum") {
  Graph b = md::k_sum(Graph::complete(3), Graph::complete(3), {0}, {0});
  CHECK(iso(b, bowtie()));

  Graph h11 = md::k_sum(Graph::complete(4), Graph::complete(4), {0, 1}, {0, 1});
  CHECK(iso(h11, md::build_fan_cliques(1, 1)));

  Graph du = md::k_sum(Graph::complete(3), Graph::path(2), {}, {});
  CHECK(du.n() == 5);
  CHECK(du.edge_count() == 4);

  // dropping a shared-clique edge is allowed, anything else is not
  Graph dropped = md::k_sum(Graph::complete(4), Graph::complete(4), {0, 1}, {0, 1},
                            {{0, 1}});
  CHECK(dropped.edge_count() == 11);
  CHECK_THROWS_AS(md::k_sum(Graph::complete(4), Graph::complete(4), {0, 1}, {0, 1},
                            {{2, 3}}),
                  std::invalid_argument);
  // overlap must induce cliques on both sides
  CHECK_THROWS_AS(md::k_sum(Graph::path(3), Graph::complete(3), {0, 2}, {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("overlap copies") {
  CHECK(iso(md::overlap_copies(Graph::complete(3), {0}, 2), bowtie()));
  Graph g1 = md::build_bowtie_star(1);  // apex is vertex 0
  CHECK(iso(md::overlap_copies(g1, {0}, 3), md::build_bowtie_star(3)));

  // overlap on an edge follows the closed form (1 + c(e-1)) / (2 + c(v-2))
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + int(rng() % 5);
    Graph g = Graph::cycle(n);
    for (int extra = 0; extra < 2; ++extra) {
      int u = int(rng() % n), v = int(rng() % n);
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    int c = 1 + int(rng() % 3);
    Graph big = md::overlap_copies(g, {0, 1}, c);
    long long e = g.edge_count(), v = g.n();
    CHECK(md::density(big) == Rational(1 + c * (e - 1), 2 + c * (v - 2)));
  }
  CHECK_THROWS_AS(md::overlap_copies(Graph::path(3), {0, 2}, 2), std::invalid_argument);
}

TEST_CASE("closed forms match builds across the desk range") {
  for (long long k = 2; k <= 6; ++k) {
    long long n = k * (k + 1) + 2;
    for (long long m = 0; m <= n; ++m) {
      if (m > n / 2 && (m - n / 2) % 3 != 0) continue;
      if (n + k > 64) break;
      md::closed_form(FamilySpec::gkm(k, m));  // throws on any mismatch
    }
    for (long long m = 3; m <= 30; m += 3) md::closed_form(FamilySpec::fkm(k, m));
    for (long long m = 1; m <= 5; ++m)
      for (long long t = 0; t < k; ++t)
        md::closed_form(FamilySpec::star_of_plants(k, m, t));
  }
  for (long long k = 0; k <= 4; ++k)
    for (long long t = 1; t <= 3; ++t) md::closed_form(FamilySpec::fan_cliques(k, t));
  for (long long k = 1; k <= 6; ++k) md::closed_form(FamilySpec::bowtie_star(k));
}

TEST_CASE("delta1 plus delta2 equals 3") {
  for (long long k = 2; k <= 12; ++k) {
    long long n = k * (k + 1) + 2;
    long long n1 = n;
    while ((n1 - n / 2) % 3 != 0) --n1;  // largest m <= n with 3 | (m - n/2)
    long long delta1 = n - n1;
    long long n2 = n - (n % 3 == 0 ? 0 : n % 3);  // largest multiple of 3
    long long delta2 = n - n2;
    CHECK(delta1 + delta2 == 3);
    CHECK((delta1 == 1 || delta1 == 2));
  }
}

TEST_CASE("gap closure quantities stay small") {
  for (long long k = 2; k <= 6; ++k) {
    long long n = k * (k + 1) + 2;
    long long n1 = n;
    while ((n1 - n / 2) % 3 != 0) --n1;
    long long delta1 = n - n1;
    long long n2 = n - (n % 3 == 0 ? 0 : n % 3);
    long long delta2 = n - n2;

    Rational a_k = Rational(k) - Rational(1, 2) + Rational(k + 2, 2 * (k * k + 2 * k + 2));
    Rational b_k = Rational(k) + Rational(1, 2) - Rational(k - 2 + 2 * delta1, 2 * (k + n));
    Rational c_k = Rational(k) + Rational(1, 2) + Rational(k - 1, 2 * (k * k + 5 * k + 1));
    Rational a_k1 = Rational(k + 1) - Rational(1, 2) +
                    Rational(k + 3, 2 * ((k + 1) * (k + 1) + 2 * (k + 1) + 2));

    CHECK(md::closed_form(FamilySpec::gkm(k, 0)).rho == a_k);
    CHECK(md::closed_form(FamilySpec::gkm(k, n1)).rho == b_k);
    Rational f_at_n2 = md::closed_form(FamilySpec::fkm(k, n2)).rho;
    CHECK(f_at_n2 == Rational(k) + Rational(1, 2) -
                         Rational(k - 2 + delta2, 2 * (k + n - delta2)));
    // the F density formula at m = n2 + 4k dominates c_k (that m need not be
    // a multiple of 3, so evaluate the formula rather than build the graph)
    long long m_hi = n2 + 4 * k;
    Rational f_formula =
        Rational(k) + Rational(1, 2) + Rational(m_hi - k * k - 2 * k, 2 * (k + m_hi));
    CHECK(f_formula >= c_k);

    Rational bound(3, k * k);
    CHECK((f_at_n2 - b_k).abs() < bound);
    CHECK((c_k - a_k1).abs() < bound);
  }
}

TEST_CASE("extension identity whenever rho_t is positive") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + int(rng() % 15);
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double p = coin(rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) g.add_edge(u, v);
    for (int t = 0; t <= 3; ++t) {
      Rational rt = md::t_density(g, t);
      if (rt.is_zero()) continue;
      CHECK(md::t_density(md::extend(g), t + 1) == rt + Rational(1));
    }
  }
}
