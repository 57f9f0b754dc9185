#include "plants.hpp"

#include <algorithm>
#include <stdexcept>

#include "util.hpp"

namespace md {

namespace {

// Monotone closure from a start edge: absorb the smallest vertex with at
// least two absorbed neighbors until none qualifies.  The absorbed set does
// not depend on absorption order; picking the smallest keeps the certificate
// deterministic.
uint64_t plant_closure(const Graph& g, int a, int b, std::vector<int>* order) {
  uint64_t absorbed = bit(a) | bit(b);
  if (order) {
    order->clear();
    order->push_back(a);
    order->push_back(b);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < g.n(); ++v) {
      if (absorbed & bit(v)) continue;
      if (popcount64(g.neighbors(v) & absorbed) >= 2) {
        absorbed |= bit(v);
        if (order) order->push_back(v);
        grew = true;
        break;
      }
    }
  }
  return absorbed;
}

bool closure_covers(const Graph& g, uint64_t subset) {
  // some start edge inside the subset must absorb all of it
  Graph sub = g.induced(subset);
  for (auto [a, b] : sub.edges())
    if (plant_closure(sub, a, b, nullptr) == sub.vertex_mask()) return true;
  return false;
}

}  // namespace

PlantResult plant_classify(const Graph& g) {
  if (g.n() < 2) throw std::domain_error("plant_classify: need at least 2 vertices");
  std::vector<int> order;
  for (auto [a, b] : g.edges()) {
    if (plant_closure(g, a, b, &order) != g.vertex_mask()) continue;
    PlantCertificate cert;
    cert.ordering = order;
    cert.back_degrees.resize(order.size());
    uint64_t before = 0;
    for (size_t i = 0; i < order.size(); ++i) {
      cert.back_degrees[i] = popcount64(g.neighbors(order[i]) & before);
      before |= bit(order[i]);
    }
    // back degrees over any valid ordering sum to e(G), so the split is a
    // property of the graph: equality holds iff e = 2v - 3
    bool eq = g.edge_count() == 2 * g.n() - 3;
    cert.classification = eq ? PlantClass::PlantEq : PlantClass::PlantPlus;
    return PlantResult{cert.classification, cert};
  }
  return PlantResult{PlantClass::NotPlant, std::nullopt};
}

namespace {

// enumerate size-r subsets of the set bits of pool, combined with base
template <typename Fn>
bool for_each_subset_of_size(uint64_t pool, int r, uint64_t base, Fn&& fn) {
  std::vector<int> items;
  for_each_bit(pool, [&](int v) { items.push_back(v); });
  int n = int(items.size());
  if (r > n) return false;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    uint64_t mask = base;
    for (int i : idx) mask |= bit(items[i]);
    if (fn(mask)) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::tuple<int, int, bool>> edge_plant_cover(const Graph& g, int k,
                                                         const EdgeCoverOptions& opts) {
  if (g.n() < 2) throw std::domain_error("edge_plant_cover: need at least 2 vertices");
  if (k < 2) throw std::invalid_argument("edge_plant_cover: k must be >= 2");
  if (g.n() > opts.max_graph_size)
    throw BudgetExceeded("edge_plant_cover: graph larger than configured limit " +
                         std::to_string(opts.max_graph_size));
  std::vector<std::tuple<int, int, bool>> verdicts;
  for (auto [u, v] : g.edges()) {
    uint64_t base = bit(u) | bit(v);
    uint64_t pool = g.vertex_mask() & ~base;
    bool covered = false;
    // (k+1)-vertex 2=-plant branch: a plant ordering of U within G[U] can
    // always route the queried edge through its chosen back edges
    if (k + 1 <= g.n())
      covered = for_each_subset_of_size(pool, k - 1, base, [&](uint64_t mask) {
        return closure_covers(g, mask);
      });
    // 2+-plant branch: closure covers U and G[U] has edge surplus; taking
    // every back edge then yields a 2+-plant subgraph containing the edge
    int cap = std::min(g.n(), opts.max_plus_subset);
    for (int size = 4; size <= cap && !covered; ++size)
      covered = for_each_subset_of_size(pool, size - 2, base, [&](uint64_t mask) {
        Graph sub = g.induced(mask);
        if (sub.edge_count() < 2 * sub.n() - 2) return false;
        return closure_covers(g, mask);
      });
    verdicts.emplace_back(u, v, covered);
  }
  return verdicts;
}

bool edge_plant_cover_all(const Graph& g, int k, const EdgeCoverOptions& opts) {
  for (auto [u, v, ok] : edge_plant_cover(g, k, opts)) {
    (void)u;
    (void)v;
    if (!ok) return false;
  }
  return true;
}

long long plant_edge_bound(long long n, int k, int t) {
  if (n < 1) throw std::invalid_argument("plant_edge_bound: n must be >= 1");
  if (k < 2) throw std::invalid_argument("plant_edge_bound: k must be >= 2");
  if (t < 0 || t >= k) throw std::invalid_argument("plant_edge_bound: t must be in [0, k-1]");
  long long rem = n - 1 - t;
  if (rem < 0 || rem % k != 0)
    throw std::invalid_argument("plant_edge_bound: n is not of the form mk+1+t");
  long long m = rem / k;
  long long bound = 2 * n - 2 - m;
  // same value as (2 - 1/k) n + (t+1)/k - 2
  Rational alt = Rational(2 * k - 1, k) * Rational(n) + Rational(t + 1, k) - Rational(2);
  if (!(alt == Rational(bound))) throw std::logic_error("plant_edge_bound: closed forms differ");
  return bound;
}

}  // namespace md
