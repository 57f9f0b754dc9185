#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "plants.hpp"
#include "rational.hpp"

namespace md::oracle {

// Reference implementations used only to cross-check the engines.  They are
// deliberately naive: full closures with all three operation kinds and no
// pruning, and exhaustive permutation scans.  Feasible for small orders.

// Every isomorphism class in the full minor closure of g (vertex deletions,
// edge deletions, contractions), keyed by canonical code, with one
// representative each.  Includes g itself.
std::map<std::string, Graph> full_minor_closure(const Graph& g);

// Maximum density over the full minor closure.
Rational densest_minor_density(const Graph& g);

// Maximum density over the deletion/contraction-only closure (edge deletion
// elided); used to validate that the elision loses nothing.
Rational densest_minor_density_no_edge_delete(const Graph& g);

// Membership test straight from the closure.
bool is_minor_naive(const Graph& h, const Graph& g);

// 2-plant recognition by scanning all vertex orderings.  Returns the set of
// outcomes seen over valid orderings: for a 2-plant, whether some ordering
// has all back degrees exactly two and whether some has a larger one.
struct PlantScan {
  bool is_plant = false;
  bool some_ordering_all_two = false;
  bool some_ordering_with_surplus = false;
};
PlantScan plant_scan_all_orderings(const Graph& g);

// Brute-force maximum of edges over n-vertex forests of paths with at most
// t vertices per component (enumerates partitions).
long long max_edges_path_forest_naive(long long n, long long t);

// Brute-force clique number over all vertex subsets (n <= 20ish).
int clique_number_naive(const Graph& g);

// All labeled graphs on n vertices, n small.
std::vector<Graph> all_labeled_graphs(int n);

}  // namespace md::oracle
