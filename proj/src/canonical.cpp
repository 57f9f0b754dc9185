#include "canonical.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace md {

namespace {

// Ordered partition of the vertex set.  Cell order is structural (derived
// from refinement counts only), so it is preserved by isomorphisms.
using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbor counts into other cells until stable.  The first
// (cell, splitter) pair that splits is applied and the scan restarts, which
// keeps the outcome independent of vertex labels.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t si = 0; si < cells.size() && !changed; ++si) {
      uint64_t smask = 0;
      for (int v : cells[si]) smask |= bit(v);
      for (size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        if (cells[ci].size() <= 1) continue;
        int first_cnt = popcount64(g.neighbors(cells[ci][0]) & smask);
        bool uniform = true;
        for (int v : cells[ci])
          if (popcount64(g.neighbors(v) & smask) != first_cnt) {
            uniform = false;
            break;
          }
        if (uniform) continue;
        // group by count, ascending; stable within groups
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cells[ci].size());
        for (int v : cells[ci]) keyed.emplace_back(popcount64(g.neighbors(v) & smask), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Cells pieces;
        for (auto [cnt, v] : keyed) {
          if (pieces.empty() || popcount64(g.neighbors(pieces.back()[0]) & smask) != cnt)
            pieces.push_back({});
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + ci);
        cells.insert(cells.begin() + ci, pieces.begin(), pieces.end());
        changed = true;
      }
    }
  }
}

std::string encode(const Graph& g, const std::vector<int>& labeling) {
  int n = g.n();
  std::string out;
  out.push_back(char(n));
  int acc = 0, nbits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = (acc << 1) | (g.has_edge(labeling[i], labeling[j]) ? 1 : 0);
      if (++nbits == 8) {
        out.push_back(char(acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(char(acc << (8 - nbits)));
  return out;
}

struct Searcher {
  const Graph& g;
  std::string best;
  std::vector<int> best_labeling;
  bool have_best = false;
  std::vector<std::vector<int>> gens;          // discovered automorphisms
  std::vector<int> prefix;                     // individualized vertices on the path
  std::vector<std::vector<int>> explored_stack;  // per-depth explored candidates
  int cont_depth = INT_MAX;                    // abandonment signal

  explicit Searcher(const Graph& gg) : g(gg) {}

  void leaf(const Cells& cells) {
    std::vector<int> labeling;
    labeling.reserve(g.n());
    for (const auto& c : cells) labeling.push_back(c[0]);
    std::string enc = encode(g, labeling);
    if (!have_best || enc < best) {
      best = std::move(enc);
      best_labeling = labeling;
      have_best = true;
      return;
    }
    if (enc != best) return;
    // equal encodings expose the automorphism a: labeling[i] -> best_labeling[i]
    std::vector<int> a(g.n());
    bool identity = true;
    for (int i = 0; i < g.n(); ++i) {
      a[labeling[i]] = best_labeling[i];
      if (labeling[i] != best_labeling[i]) identity = false;
    }
    if (identity) return;
    if (gens.size() < 128) gens.push_back(a);
    // Abandon the current branch only when a fixes the prefix above depth d
    // pointwise and maps the depth-d branch vertex onto a sibling that was
    // already explored: the remaining subtree then repeats that sibling's.
    for (size_t d = 0; d < prefix.size(); ++d)
      if (a[prefix[d]] != prefix[d]) {
        int image = a[prefix[d]];
        const auto& done = explored_stack[d];
        if (std::find(done.begin(), done.end(), image) != done.end())
          cont_depth = int(d);
        return;
      }
  }

  // Union-find orbits under the generators that fix the current prefix.
  std::vector<int> prefix_orbits() {
    std::vector<int> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : gens) {
      bool fixes = true;
      for (int p : prefix)
        if (a[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < g.n(); ++v) {
        int ra = find(v), rb = find(a[v]);
        if (ra != rb) parent[ra] = rb;
      }
    }
    for (int v = 0; v < g.n(); ++v) parent[v] = find(v);
    return parent;
  }

  void dfs(const Cells& cells, int depth) {
    size_t target = cells.size();
    for (size_t ci = 0; ci < cells.size(); ++ci)
      if (cells[ci].size() > 1) {
        target = ci;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    explored_stack[depth].clear();
    std::vector<int>& explored = explored_stack[depth];
    for (int v : cells[target]) {
      if (!explored.empty()) {
        std::vector<int> orbit = prefix_orbits();
        bool dup = false;
        for (int u : explored)
          if (orbit[u] == orbit[v]) {
            dup = true;
            break;
          }
        if (dup) continue;
      }
      explored.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t ci = 0; ci < cells.size(); ++ci) {
        if (ci != target) {
          child.push_back(cells[ci]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[ci])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(g, child);
      prefix.push_back(v);
      dfs(child, depth + 1);
      prefix.pop_back();
      if (cont_depth != INT_MAX) {
        if (cont_depth < depth) return;  // keep unwinding
        cont_depth = INT_MAX;            // abandon this candidate, try next
      }
    }
  }
};

CanonicalResult run(const Graph& g, Cells start) {
  CanonicalResult result;
  if (g.n() == 0) {
    result.code.push_back(char(0));
    return result;
  }
  refine(g, start);
  Searcher s(g);
  s.explored_stack.resize(size_t(g.n()) + 1);
  s.dfs(start, 0);
  result.code = std::move(s.best);
  result.labeling = std::move(s.best_labeling);
  return result;
}

}  // namespace

CanonicalResult canonical_form_full(const Graph& g) {
  Cells start;
  if (g.n() > 0) {
    start.push_back(std::vector<int>(g.n()));
    std::iota(start[0].begin(), start[0].end(), 0);
  }
  return run(g, std::move(start));
}

std::string canonical_form(const Graph& g) { return canonical_form_full(g).code; }

std::string canonical_form_marked(const Graph& g, int marked) {
  if (marked < 0 || marked >= g.n())
    throw std::invalid_argument("canonical: marked vertex out of range");
  Cells start;
  start.push_back({marked});
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v)
    if (v != marked) rest.push_back(v);
  if (!rest.empty()) start.push_back(std::move(rest));
  return run(g, std::move(start)).code;
}

Graph canonical_relabel(const Graph& g) {
  return g.permuted(canonical_form_full(g).labeling);
}

}  // namespace md
