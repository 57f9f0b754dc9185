#include "graph.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>

namespace md {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph: vertex count out of range 0..64");
  rows_.fill(0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += popcount64(rows_[v]);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("graph: self-loop rejected");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

int Graph::min_degree() const {
  int d = kMaxVertices;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(rows_[u] & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (rows_[v] != o.rows_[v]) return false;
  return true;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (int(perm.size()) != n_) throw std::invalid_argument("graph: bad permutation size");
  Graph out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(perm[i], perm[j])) out.add_edge(i, j);
  return out;
}

Graph Graph::induced(uint64_t mask) const {
  mask &= vertex_mask();
  std::vector<int> keep;
  for_each_bit(mask, [&](int v) { keep.push_back(v); });
  Graph out{static_cast<int>(keep.size())};
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (has_edge(keep[i], keep[j])) out.add_edge(int(i), int(j));
  return out;
}

Graph Graph::delete_vertex(int v) const {
  check_vertex(v);
  return induced(vertex_mask() & ~bit(v));
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("graph: cycle needs >= 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  if (n_ + other.n_ > kMaxVertices) throw std::invalid_argument("graph: capacity exceeded");
  Graph g(n_ + other.n_);
  for (auto [u, v] : edges()) g.add_edge(u, v);
  for (auto [u, v] : other.edges()) g.add_edge(u + n_, v + n_);
  return g;
}

Rational density(const Graph& g) {
  if (g.n() == 0) throw std::domain_error("density: empty graph");
  return Rational(g.edge_count(), g.n());
}

Rational t_density(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("t_density: t must be >= 0");
  long long e = g.edge_count();
  long long offset = binom2(t);
  if (e <= offset) return Rational(0);
  // e > C(t,2) forces v >= t+1 for a simple graph
  return Rational(e - offset, g.n() - t);
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  uint64_t seen = bit(0), frontier = bit(0);
  while (frontier) {
    uint64_t next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

namespace {

// Unit-capacity vertex cut between non-adjacent s and t via augmenting paths
// on the split digraph (v_in -> v_out capacity 1, edges have no bound).
int vertex_cut(const Graph& g, int s, int t) {
  int n = g.n();
  // node 2v = in, 2v+1 = out
  std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (auto [u, v] : g.edges()) {
    cap[2 * u + 1][2 * v] = n;
    cap[2 * v + 1][2 * u] = n;
  }
  int flow = 0;
  for (;;) {
    std::vector<int> prev(2 * n, -1);
    std::vector<int> queue{2 * s + 1};
    prev[2 * s + 1] = 2 * s + 1;
    for (size_t qi = 0; qi < queue.size() && prev[2 * t] < 0; ++qi) {
      int x = queue[qi];
      for (int y = 0; y < 2 * n; ++y)
        if (prev[y] < 0 && cap[x][y] > 0) {
          prev[y] = x;
          queue.push_back(y);
        }
    }
    if (prev[2 * t] < 0) return flow;
    for (int y = 2 * t; y != 2 * s + 1; y = prev[y]) {
      cap[prev[y]][y] -= 1;
      cap[y][prev[y]] += 1;
    }
    ++flow;
  }
}

}  // namespace

int connectivity(const Graph& g) {
  int n = g.n();
  if (n == 0) throw std::domain_error("connectivity: empty graph");
  if (n == 1) return 0;
  if (!is_connected(g)) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, vertex_cut(g, s, t));
  return best;
}

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<int>> out;
  int timer = 0;

  explicit BlockFinder(const Graph& gg)
      : g(gg), disc(gg.n(), -1), low(gg.n(), -1) {}

  void emit_from(size_t base) {
    uint64_t verts = 0;
    while (stack.size() > base) {
      auto [a, b] = stack.back();
      stack.pop_back();
      verts |= bit(a) | bit(b);
    }
    std::vector<int> block;
    for_each_bit(verts, [&](int v) { block.push_back(v); });
    out.push_back(std::move(block));
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    for_each_bit(g.neighbors(u), [&](int v) {
      if (v == parent) return;
      if (disc[v] == -1) {
        size_t base = stack.size();
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) emit_from(base);
      } else if (disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    });
  }
};

}  // namespace

std::vector<std::vector<int>> blocks(const Graph& g) {
  BlockFinder finder(g);
  for (int v = 0; v < g.n(); ++v) {
    if (finder.disc[v] == -1) {
      if (g.degree(v) == 0) {
        finder.out.push_back({v});
      } else {
        finder.dfs(v, -1);
      }
    }
  }
  for (auto& b : finder.out) std::sort(b.begin(), b.end());
  std::sort(finder.out.begin(), finder.out.end());
  return finder.out;
}

namespace {

void clique_search(const Graph& g, uint64_t cand, int size, int& best) {
  if (size + popcount64(cand) <= best) return;
  if (!cand) {
    best = std::max(best, size);
    return;
  }
  int v = std::countr_zero(cand);
  clique_search(g, cand & g.neighbors(v), size + 1, best);
  clique_search(g, cand & ~bit(v), size, best);
}

}  // namespace

int clique_number(const Graph& g) {
  if (g.n() == 0) throw std::domain_error("clique_number: empty graph");
  int best = 0;
  clique_search(g, g.vertex_mask(), 0, best);
  return best;
}

// --- graph6 ------------------------------------------------------------

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (size_t i = 0; i < 6; ++i) {
      v <<= 1;
      if (k + i < bits.size() && bits[k + i]) v |= 1;
    }
    out.push_back(char(v + 63));
  }
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else {
    // three-byte header for 63 <= n <= 258047
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  }
  std::vector<bool> bits;
  bits.reserve(size_t(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  append_bits(out, bits);
  return out;
}

Graph parse_graph6(const std::string& raw) {
  std::string text = raw;
  const std::string header = ">>graph6<<";
  if (text.rfind(header, 0) == 0) text = text.substr(header.size());
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: character out of range");
  size_t pos = 0;
  long long n;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw std::invalid_argument("graph6: 8-byte order exceeds capacity");
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated order");
    n = ((long long)(text[1] - 63) << 12) | ((long long)(text[2] - 63) << 6) |
        (long long)(text[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6: order exceeds capacity 64");
  size_t nbits = size_t(n) * (n - 1) / 2;
  size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw std::invalid_argument("graph6: wrong payload length");
  Graph g{static_cast<int>(n)};
  size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  // padding bits must be zero
  for (size_t p = nbits; p < nbytes * 6; ++p) {
    int byte = text[pos + p / 6] - 63;
    if ((byte >> (5 - p % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding");
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace md
