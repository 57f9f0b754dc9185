#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "canonical.hpp"
#include "minor.hpp"

namespace md::oracle {

std::map<std::string, Graph> full_minor_closure(const Graph& g) {
  std::map<std::string, Graph> closure;
  std::vector<Graph> queue{g};
  closure.emplace(canonical_form(g), g);
  while (!queue.empty()) {
    Graph cur = queue.back();
    queue.pop_back();
    std::vector<Graph> children;
    if (cur.n() > 1)
      for (int v = 0; v < cur.n(); ++v) children.push_back(cur.delete_vertex(v));
    for (auto [u, v] : cur.edges()) {
      children.push_back(apply_minor_op(cur, MinorOp::del_edge(u, v)));
      children.push_back(apply_minor_op(cur, MinorOp::contract(u, v)));
    }
    for (const Graph& child : children) {
      if (child.n() == 0) continue;
      std::string code = canonical_form(child);
      if (closure.emplace(code, child).second) queue.push_back(child);
    }
  }
  return closure;
}

Rational densest_minor_density(const Graph& g) {
  Rational best(0);
  for (const auto& [code, h] : full_minor_closure(g)) {
    (void)code;
    Rational rho = density(h);
    if (rho > best) best = rho;
  }
  return best;
}

Rational densest_minor_density_no_edge_delete(const Graph& g) {
  std::map<std::string, Graph> closure;
  std::vector<Graph> queue{g};
  closure.emplace(canonical_form(g), g);
  Rational best = density(g);
  while (!queue.empty()) {
    Graph cur = queue.back();
    queue.pop_back();
    std::vector<Graph> children;
    if (cur.n() > 1)
      for (int v = 0; v < cur.n(); ++v) children.push_back(cur.delete_vertex(v));
    for (auto [u, v] : cur.edges())
      children.push_back(apply_minor_op(cur, MinorOp::contract(u, v)));
    for (const Graph& child : children) {
      if (child.n() == 0) continue;
      std::string code = canonical_form(child);
      if (closure.emplace(code, child).second) {
        queue.push_back(child);
        Rational rho = density(child);
        if (rho > best) best = rho;
      }
    }
  }
  return best;
}

bool is_minor_naive(const Graph& h, const Graph& g) {
  return full_minor_closure(g).count(canonical_form(h)) > 0;
}

PlantScan plant_scan_all_orderings(const Graph& g) {
  PlantScan scan;
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (!g.has_edge(perm[0], perm[1])) continue;
    bool valid = true;
    bool surplus = false;
    uint64_t before = bit(perm[0]) | bit(perm[1]);
    for (size_t i = 2; i < perm.size() && valid; ++i) {
      int back = popcount64(g.neighbors(perm[i]) & before);
      if (back < 2) valid = false;
      if (back > 2) surplus = true;
      before |= bit(perm[i]);
    }
    if (valid) {
      scan.is_plant = true;
      if (surplus)
        scan.some_ordering_with_surplus = true;
      else
        scan.some_ordering_all_two = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return scan;
}

namespace {

long long best_partition_edges(long long n, long long t, long long largest) {
  if (n == 0) return 0;
  long long best = -1;
  for (long long part = std::min({n, t, largest}); part >= 1; --part) {
    long long rest = best_partition_edges(n - part, t, part);
    if (rest >= 0) best = std::max(best, part - 1 + rest);
  }
  return best;
}

}  // namespace

long long max_edges_path_forest_naive(long long n, long long t) {
  return best_partition_edges(n, t, n);
}

int clique_number_naive(const Graph& g) {
  int best = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << g.n()); ++mask) {
    int size = popcount64(mask);
    if (size <= best) continue;
    bool clique = true;
    for_each_bit(mask, [&](int v) {
      if ((g.neighbors(v) & mask) != (mask & ~bit(v))) clique = false;
    });
    if (clique) best = size;
  }
  return best;
}

std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Graph> out;
  int pairs = n * (n - 1) / 2;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx)
        if ((mask >> idx) & 1) g.add_edge(u, v);
    out.push_back(g);
  }
  return out;
}

}  // namespace md::oracle
