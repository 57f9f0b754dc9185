#include "minor.hpp"

#include <algorithm>
#include <list>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "canonical.hpp"

namespace md {

Graph apply_minor_op(const Graph& g, const MinorOp& op) {
  switch (op.kind) {
    case MinorOpKind::DeleteVertex:
      return g.delete_vertex(op.u);
    case MinorOpKind::DeleteEdge: {
      if (!g.has_edge(op.u, op.v))
        throw std::invalid_argument("minor op: edge does not exist");
      Graph out = g;
      out.remove_edge(op.u, op.v);
      return out;
    }
    case MinorOpKind::ContractEdge: {
      if (!g.has_edge(op.u, op.v))
        throw std::invalid_argument("minor op: contraction of a non-edge");
      int keep = std::min(op.u, op.v), drop = std::max(op.u, op.v);
      Graph merged = g;
      merged.remove_edge(keep, drop);
      for_each_bit(g.neighbors(drop) & ~bit(keep), [&](int w) {
        if (w != keep) merged.add_edge(keep, w);
      });
      return merged.delete_vertex(drop);
    }
  }
  throw std::logic_error("minor op: unknown kind");
}

std::string op_to_string(const MinorOp& op) {
  switch (op.kind) {
    case MinorOpKind::DeleteVertex:
      return "dv(" + std::to_string(op.u) + ")";
    case MinorOpKind::DeleteEdge:
      return "de(" + std::to_string(op.u) + "," + std::to_string(op.v) + ")";
    case MinorOpKind::ContractEdge:
      return "ct(" + std::to_string(op.u) + "," + std::to_string(op.v) + ")";
  }
  return "?";
}

Rational density_upper_bound(long long e, int t) {
  long long offset = binom2(t);
  if (e <= offset) return Rational(0);
  // densest possibility at e edges: either all e edges on as few vertices as
  // possible, or the largest complete graph fitting within e edges
  int w = 1;
  while (binom2(w + 1) <= e) ++w;  // largest complete order within e
  int vmin = 1;
  while (binom2(vmin) < e) ++vmin;  // fewest vertices carrying e edges
  Rational best(0);
  if (w >= t + 1) best = Rational(w + t - 1, 2);
  int v1 = std::max(vmin, t + 1);
  Rational top = Rational(e - offset, v1 - t);
  if (top > best) best = top;
  return best;
}

namespace {

// Bounded-size memo of visited canonical codes, least-recently-used eviction.
class CodeMemo {
 public:
  explicit CodeMemo(size_t capacity) : cap_(capacity) {}

  // Returns true when the code was already present (and refreshes it).
  bool check_and_insert(const std::string& code) {
    auto it = map_.find(code);
    if (it != map_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second);
      return true;
    }
    lru_.push_front(code);
    map_.emplace(lru_.front(), lru_.begin());
    if (map_.size() > cap_) {
      map_.erase(lru_.back());
      lru_.pop_back();
    }
    return false;
  }

 private:
  size_t cap_;
  std::list<std::string> lru_;
  std::unordered_map<std::string, std::list<std::string>::iterator> map_;
};

Rational value_of(const Graph& g, int t) {
  if (t == 0) return g.n() == 0 ? Rational(0) : density(g);
  return t_density(g, t);
}

// Children of a state in the deletion/contraction closure, in a fixed order.
template <typename Fn>
void for_each_child(const Graph& g, Fn&& fn) {
  if (g.n() > 1)
    for (int v = 0; v < g.n(); ++v) fn(MinorOp::del_vertex(v));
  for (auto [u, v] : g.edges()) fn(MinorOp::contract(u, v));
}

struct SearchCore {
  const SearchOptions& opts;
  CodeMemo memo;
  uint64_t explored = 0;
  std::vector<MinorOp> path;

  explicit SearchCore(const SearchOptions& o) : opts(o), memo(o.memo_capacity) {}

  void bump() {
    if (++explored > opts.budget)
      throw BudgetExceeded("minor search: budget of " +
                           std::to_string(opts.budget) + " states exceeded");
  }
};

struct DensestSearch : SearchCore {
  int t = 0;
  Rational best_rho;
  int best_n = 0;
  std::string best_code;
  Graph best_graph;
  std::vector<MinorOp> best_ops;

  using SearchCore::SearchCore;

  void consider(const Graph& h, const std::string& code) {
    Rational rho = value_of(h, t);
    int cmp = rho.compare(best_rho);
    if (cmp < 0) return;
    if (cmp > 0 || h.n() < best_n || (h.n() == best_n && code < best_code)) {
      best_rho = rho;
      best_n = h.n();
      best_code = code;
      best_graph = h;
      best_ops = path;
    }
  }

  void visit(const Graph& g) {
    for_each_child(g, [&](const MinorOp& op) {
      Graph child = apply_minor_op(g, op);
      if (child.n() == 0) return;
      std::string code = canonical_form(child);
      if (memo.check_and_insert(code)) return;
      bump();
      path.push_back(op);
      consider(child, code);
      // equal bound must recurse: a tie with fewer vertices may exist below
      if (density_upper_bound(child.edge_count(), t) >= best_rho) visit(child);
      path.pop_back();
    });
  }
};

struct BalanceSearch : SearchCore {
  int t = 0;
  bool strict = false;
  Rational target;
  std::optional<Counterexample> found;

  using SearchCore::SearchCore;

  bool violation(const Rational& v) const {
    return strict ? v >= target : v > target;
  }
  bool subtree_alive(long long e) const {
    Rational ub = density_upper_bound(e, t);
    return strict ? ub >= target : ub > target;
  }

  // returns true when a counterexample stops the search
  bool visit(const Graph& g) {
    bool stop = false;
    for_each_child(g, [&](const MinorOp& op) {
      if (stop) return;
      Graph child = apply_minor_op(g, op);
      if (child.n() == 0) return;
      if (!subtree_alive(child.edge_count())) return;
      std::string code = canonical_form(child);
      if (memo.check_and_insert(code)) return;
      bump();
      path.push_back(op);
      Rational v = value_of(child, t);
      if (violation(v)) {
        found = Counterexample{child, v, path};
        stop = true;
      } else {
        stop = visit(child);
      }
      path.pop_back();
    });
    return stop;
  }
};

}  // namespace

DensestResult densest_minor(const Graph& g, const SearchOptions& opts) {
  if (g.n() == 0) throw std::domain_error("densest_minor: empty graph");
  DensestSearch search(opts);
  search.t = 0;
  search.best_rho = density(g);
  search.best_n = g.n();
  search.best_code = canonical_form(g);
  search.best_graph = g;
  search.visit(g);
  return DensestResult{search.best_graph, search.best_rho, search.best_ops,
                       search.explored};
}

BalanceReport balance_check(const Graph& g, BalanceQuery query,
                            const SearchOptions& opts) {
  if (g.n() == 0) throw std::domain_error("balance_check: empty graph");
  if (query.t_mode() && query.t < 0)
    throw std::invalid_argument("balance_check: t must be >= 0");
  BalanceReport report;
  report.query = query;
  int t = query.effective_t();
  Rational target = value_of(g, t);
  if (query.t_mode() && target.is_zero()) {
    report.verdict = false;
    report.positivity_failed = true;
    return report;
  }
  BalanceSearch search(opts);
  search.t = t;
  search.strict = query.strict();
  search.target = target;
  search.visit(g);
  report.explored = search.explored;
  if (search.found) {
    report.verdict = false;
    report.counterexample = std::move(search.found);
  } else {
    report.verdict = true;
  }
  return report;
}

namespace {

// Spanning-subgraph embedding: bijection phi with every H-edge mapped onto a
// G-edge (G may have extra edges).  Both graphs have the same order.
std::optional<std::vector<int>> spanning_embedding(const Graph& h, const Graph& g) {
  int n = h.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // high-degree vertices first makes dead ends appear early
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> phi(n, -1);
  uint64_t used = 0;
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    int hv = order[idx];
    for (int gv = 0; gv < n; ++gv) {
      if (used & bit(gv)) continue;
      if (h.degree(hv) > g.degree(gv)) continue;
      bool ok = true;
      for (int prev = 0; prev < idx && ok; ++prev)
        if (h.has_edge(hv, order[prev]) && !g.has_edge(gv, phi[order[prev]]))
          ok = false;
      if (!ok) continue;
      phi[hv] = gv;
      used |= bit(gv);
      if (self(self, idx + 1)) return true;
      used &= ~bit(gv);
      phi[hv] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return phi;
  return std::nullopt;
}

struct MinorTest : SearchCore {
  const Graph& h;
  int hv, he;
  std::optional<std::vector<MinorOp>> found_ops;
  std::optional<std::vector<int>> found_phi;

  MinorTest(const Graph& hh, const SearchOptions& o)
      : SearchCore(o), h(hh), hv(hh.n()), he(hh.edge_count()) {}

  bool visit(const Graph& g) {
    if (g.n() == hv) {
      auto phi = spanning_embedding(h, g);
      if (phi) {
        found_ops = path;
        found_phi = phi;
        return true;
      }
      return false;
    }
    bool stop = false;
    for_each_child(g, [&](const MinorOp& op) {
      if (stop) return;
      Graph child = apply_minor_op(g, op);
      if (child.n() < hv || child.edge_count() < he) return;
      std::string code = canonical_form(child);
      if (memo.check_and_insert(code)) return;
      bump();
      path.push_back(op);
      stop = visit(child);
      path.pop_back();
    });
    return stop;
  }
};

}  // namespace

bool certificate_valid(const MinorCertificate& cert, const Graph& h, const Graph& g) {
  if (int(cert.branch_sets.size()) != h.n()) return false;
  uint64_t seen = 0;
  for (const auto& set : cert.branch_sets) {
    if (set.empty()) return false;
    uint64_t mask = 0;
    for (int v : set) {
      if (v < 0 || v >= g.n()) return false;
      mask |= bit(v);
    }
    if (mask & seen) return false;  // disjointness
    seen |= mask;
    if (!is_connected(g.induced(mask))) return false;
  }
  auto hedges = h.edges();
  if (cert.edge_witnesses.size() != hedges.size()) return false;
  for (auto [hu, hvx, gu, gv] : cert.edge_witnesses) {
    if (hu < 0 || hu >= h.n() || hvx < 0 || hvx >= h.n()) return false;
    if (!h.has_edge(hu, hvx)) return false;
    if (!g.has_edge(gu, gv)) return false;
    auto in_set = [&](int hvertex, int gvertex) {
      const auto& s = cert.branch_sets[hvertex];
      return std::find(s.begin(), s.end(), gvertex) != s.end();
    };
    bool forward = in_set(hu, gu) && in_set(hvx, gv);
    bool backward = in_set(hu, gv) && in_set(hvx, gu);
    if (!forward && !backward) return false;
  }
  // every H-edge covered exactly once, in edge order
  for (size_t i = 0; i < hedges.size(); ++i) {
    auto [a, b] = hedges[i];
    if (cert.edge_witnesses[i][0] != a || cert.edge_witnesses[i][1] != b) return false;
  }
  return true;
}

std::optional<MinorCertificate> is_minor(const Graph& h, const Graph& g,
                                         const SearchOptions& opts) {
  if (h.n() < 1) throw std::domain_error("is_minor: pattern must have a vertex");
  if (h.n() > g.n() || h.edge_count() > g.edge_count()) return std::nullopt;
  MinorTest test(h, opts);
  if (!test.visit(g)) return std::nullopt;

  // replay the ops to recover branch sets of the final graph's vertices
  std::vector<std::vector<int>> sets(g.n());
  for (int v = 0; v < g.n(); ++v) sets[v] = {v};
  for (const MinorOp& op : *test.found_ops) {
    if (op.kind == MinorOpKind::DeleteVertex) {
      sets.erase(sets.begin() + op.u);
    } else {
      int keep = std::min(op.u, op.v), drop = std::max(op.u, op.v);
      sets[keep].insert(sets[keep].end(), sets[drop].begin(), sets[drop].end());
      sets.erase(sets.begin() + drop);
    }
  }
  MinorCertificate cert;
  cert.branch_sets.resize(h.n());
  const std::vector<int>& phi = *test.found_phi;
  for (int hvx = 0; hvx < h.n(); ++hvx) {
    cert.branch_sets[hvx] = sets[phi[hvx]];
    std::sort(cert.branch_sets[hvx].begin(), cert.branch_sets[hvx].end());
  }
  for (auto [a, b] : h.edges()) {
    bool placed = false;
    for (int x : cert.branch_sets[a]) {
      for (int y : cert.branch_sets[b])
        if (g.has_edge(x, y)) {
          cert.edge_witnesses.push_back({a, b, x, y});
          placed = true;
          break;
        }
      if (placed) break;
    }
    if (!placed) throw std::logic_error("is_minor: witness edge missing");
  }
  return cert;
}

bool in_ex_class(const Graph& g, const std::vector<Graph>& excluded,
                 const SearchOptions& opts) {
  if (excluded.empty()) throw std::invalid_argument("in_ex_class: empty excluded list");
  for (const Graph& h : excluded)
    if (is_minor(h, g, opts)) return false;
  return true;
}

}  // namespace md
