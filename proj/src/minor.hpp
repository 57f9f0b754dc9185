#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace md {

enum class MinorOpKind { DeleteVertex, DeleteEdge, ContractEdge };

// One minor operation, addressed in the labeling of the graph it applies to.
struct MinorOp {
  MinorOpKind kind;
  int u = 0;
  int v = 0;  // unused for DeleteVertex

  static MinorOp del_vertex(int v) { return {MinorOpKind::DeleteVertex, v, 0}; }
  static MinorOp del_edge(int u, int v) { return {MinorOpKind::DeleteEdge, u, v}; }
  static MinorOp contract(int u, int v) { return {MinorOpKind::ContractEdge, u, v}; }
};

// Applies one operation.  Contraction merges the two endpoints into the
// smaller label, unioning neighborhoods and discarding loops and parallels;
// the larger label is removed and labels above it shift down.
Graph apply_minor_op(const Graph& g, const MinorOp& op);

std::string op_to_string(const MinorOp& op);

enum class BalanceMode {
  MinorBalanced,
  StrictlyMinorBalanced,
  TMinorBalanced,
  StrictlyTMinorBalanced,
};

struct BalanceQuery {
  BalanceMode mode = BalanceMode::MinorBalanced;
  int t = 0;  // used by the t-modes only

  bool strict() const {
    return mode == BalanceMode::StrictlyMinorBalanced ||
           mode == BalanceMode::StrictlyTMinorBalanced;
  }
  bool t_mode() const {
    return mode == BalanceMode::TMinorBalanced ||
           mode == BalanceMode::StrictlyTMinorBalanced;
  }
  int effective_t() const { return t_mode() ? t : 0; }
};

struct Counterexample {
  Graph minor;
  Rational value;            // its rho or rho_t
  std::vector<MinorOp> ops;  // operation sequence from the checked graph
};

struct BalanceReport {
  bool verdict = false;
  BalanceQuery query;
  std::optional<Counterexample> counterexample;
  // t-modes require rho_t(G) > 0; when that fails the verdict is false and
  // no counterexample minor exists.
  bool positivity_failed = false;
  uint64_t explored = 0;
};

struct SearchOptions {
  uint64_t budget = 100'000'000;     // visited canonical states
  size_t memo_capacity = 1u << 22;   // LRU dedup entries; eviction only costs time
};

struct DensestResult {
  Graph minor;
  Rational rho;
  std::vector<MinorOp> ops;
  uint64_t explored = 0;
};

// Densest minor over the vertex-deletion/contraction closure (which attains
// the maximum density over all minors).  Ties prefer fewer vertices, then
// the smaller canonical code.
DensestResult densest_minor(const Graph& g, const SearchOptions& opts = {});

BalanceReport balance_check(const Graph& g, BalanceQuery query,
                            const SearchOptions& opts = {});

struct MinorCertificate {
  // branch_sets[h] = connected set of G-vertices modeling vertex h of H
  std::vector<std::vector<int>> branch_sets;
  // one witness G-edge per H-edge: {hu, hv, gu, gv}
  std::vector<std::array<int, 4>> edge_witnesses;
};

std::optional<MinorCertificate> is_minor(const Graph& h, const Graph& g,
                                         const SearchOptions& opts = {});

// Independent validation of a certificate against H and G.
bool certificate_valid(const MinorCertificate& cert, const Graph& h, const Graph& g);

bool in_ex_class(const Graph& g, const std::vector<Graph>& excluded,
                 const SearchOptions& opts = {});

// Largest rho_t value any graph with at most e edges can have.  Used as the
// pruning bound: every further minor of a state with e edges has at most e
// edges.
Rational density_upper_bound(long long e, int t);

}  // namespace md
