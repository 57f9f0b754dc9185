#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "util.hpp"

namespace md {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on at most 64 labeled vertices {0..n-1}.
// One machine word of adjacency per vertex; the relation is kept symmetric
// and irreflexive (no loops, no parallel edges).  Immutable in spirit: all
// graph operations return new values.
class Graph {
 public:
  Graph() { rows_.fill(0); }
  explicit Graph(int n);

  int n() const { return n_; }
  int edge_count() const;
  uint64_t vertex_mask() const { return low_mask(n_); }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  uint64_t neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return popcount64(rows_[v]); }
  int min_degree() const;
  int max_degree() const;

  std::vector<std::pair<int, int>> edges() const;

  // Labeled equality (same n, same adjacency).
  bool operator==(const Graph& o) const;

  // New graph whose vertex i is this graph's vertex perm[i].
  Graph permuted(const std::vector<int>& perm) const;
  // Induced subgraph on the set bits of mask, relabeled compactly ascending.
  Graph induced(uint64_t mask) const;
  // Remaining graph after removing vertex v; labels above v shift down.
  Graph delete_vertex(int v) const;

  static Graph complete(int n);
  static Graph empty_graph(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int a, int b);
  // Disjoint union, other's vertices relabeled after this graph's.
  Graph disjoint_union(const Graph& other) const;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::array<uint64_t, kMaxVertices> rows_;
};

// --- structural queries ------------------------------------------------

// rho(G) = e/v.  Throws std::domain_error for the empty graph.
Rational density(const Graph& g);

// rho_t(G) = (e - C(t,2)) / (v - t) when e > C(t,2), otherwise 0.
Rational t_density(const Graph& g, int t);

bool is_connected(const Graph& g);

// Vertex connectivity.  K_n gives n-1, K_1 gives 0, disconnected graphs 0.
int connectivity(const Graph& g);

// Block decomposition: maximal 2-connected subgraphs, bridges with their
// endpoints, and isolated vertices as singletons.  Each block is a sorted
// vertex list; the list of blocks is sorted for determinism.
std::vector<std::vector<int>> blocks(const Graph& g);

int clique_number(const Graph& g);

// --- graph6 ------------------------------------------------------------

std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);
// One graph per non-empty line; tolerates an optional ">>graph6<<" header.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace md
