#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace md {

struct CanonicalResult {
  // Total-order-comparable encoding of the isomorphism class: one byte for
  // the order followed by the packed upper triangle in canonical order.
  std::string code;
  // labeling[position] = original vertex occupying that canonical position.
  std::vector<int> labeling;
};

// Deterministic canonical form: codes of two graphs agree iff the graphs are
// isomorphic.  Color refinement plus branch-and-bound individualization with
// automorphism pruning; the code is the minimum adjacency encoding over the
// refinement-compatible orderings.
CanonicalResult canonical_form_full(const Graph& g);
std::string canonical_form(const Graph& g);

// Canonical form with one vertex distinguished: codes agree iff there is an
// isomorphism matching the marked vertices.
std::string canonical_form_marked(const Graph& g, int marked);

// The graph relabeled into canonical order (stable target for graph6 output).
Graph canonical_relabel(const Graph& g);

}  // namespace md
