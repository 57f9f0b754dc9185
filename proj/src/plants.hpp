#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "graph.hpp"

namespace md {

enum class PlantClass { NotPlant, PlantEq, PlantPlus };

// Witness for the 2-plant property: an ordering starting at an edge where
// every later vertex sees at least two earlier neighbors.  back_degrees[j]
// counts earlier neighbors of ordering[j] (position 0 gives 0, position 1
// gives 1); the profile sums to e(G), which makes the Eq/Plus split
// independent of the ordering exhibited.
struct PlantCertificate {
  std::vector<int> ordering;
  std::vector<int> back_degrees;
  PlantClass classification = PlantClass::NotPlant;
};

struct PlantResult {
  PlantClass cls = PlantClass::NotPlant;
  std::optional<PlantCertificate> cert;
};

// Recognition by closure propagation: from each candidate start edge,
// repeatedly absorb any vertex with two absorbed neighbors; the graph is a
// 2-plant iff some start edge's closure covers it.  PlantEq iff e = 2v - 3.
PlantResult plant_classify(const Graph& g);

struct EdgeCoverOptions {
  int max_graph_size = 18;   // larger graphs raise BudgetExceeded
  int max_plus_subset = 12;  // subset size cap for the 2+ branch
};

// For each edge: is it inside a (k+1)-vertex 2=-plant subgraph, or inside
// some 2+-plant subgraph (at least 4 vertices, edge surplus over 2|U|-3)?
// Entries are (u, v, covered) in edge order.
std::vector<std::tuple<int, int, bool>> edge_plant_cover(
    const Graph& g, int k, const EdgeCoverOptions& opts = {});

bool edge_plant_cover_all(const Graph& g, int k, const EdgeCoverOptions& opts = {});

// Lower bound 2n - 2 - m on edges for connected graphs covered by such
// plants, where n = mk + 1 + t.  Also equal to (2 - 1/k)n + (t+1)/k - 2.
long long plant_edge_bound(long long n, int k, int t);

}  // namespace md
