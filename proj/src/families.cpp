#include "families.hpp"

#include <algorithm>
#include <stdexcept>

namespace md {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void add_clique(Graph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) g.add_edge(verts[i], verts[j]);
}

}  // namespace

Graph build_gkm(int k, long long m) {
  require(k >= 2, "gkm: k must be >= 2");
  long long n = (long long)k * (k + 1) + 2;
  require(m >= 0 && m <= n, "gkm: m must be in [0, n]");
  if (m > n / 2) require((m - n / 2) % 3 == 0, "gkm: m - n/2 must be a multiple of 3");
  require(k + n <= kMaxVertices, "gkm: exceeds vertex capacity");
  Graph g{static_cast<int>(k + n)};
  // clique on X = {0..k-1}, complete bipartite X-Y
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    for (int y = 0; y < n; ++y) g.add_edge(u, k + y);
  }
  auto y = [&](long long i) { return int(k + i); };
  if (m <= n / 2) {
    for (long long i = 0; i < m; ++i) g.add_edge(y(2 * i), y(2 * i + 1));
  } else {
    long long tri = 2 * (m - n / 2) / 3;  // triangles on the lowest labels
    for (long long i = 0; i < tri; ++i) {
      g.add_edge(y(3 * i), y(3 * i + 1));
      g.add_edge(y(3 * i + 1), y(3 * i + 2));
      g.add_edge(y(3 * i), y(3 * i + 2));
    }
    for (long long i = 3 * tri; i < n; i += 2) g.add_edge(y(i), y(i + 1));
  }
  return g;
}

Graph build_fkm(int k, long long m) {
  require(k >= 2, "fkm: k must be >= 2");
  require(m >= 3 && m % 3 == 0, "fkm: m must be a positive multiple of 3");
  require(k + m <= kMaxVertices, "fkm: exceeds vertex capacity");
  Graph g{static_cast<int>(k + m)};
  std::vector<int> shared(k);
  for (int i = 0; i < k; ++i) shared[i] = i;
  for (long long c = 0; c < m / 3; ++c) {
    std::vector<int> clique = shared;
    for (int j = 0; j < 3; ++j) clique.push_back(int(k + 3 * c + j));
    add_clique(g, clique);
  }
  return g;
}

Graph build_star_of_plants(int k, long long m, int t) {
  require(k >= 2, "star_of_plants: k must be >= 2");
  require(m >= 1, "star_of_plants: m must be >= 1");
  require(t >= 0 && t < k, "star_of_plants: t must be in [0, k-1]");
  long long n = m * k + 1 + t;
  require(n <= kMaxVertices, "star_of_plants: exceeds vertex capacity");
  Graph g{static_cast<int>(n)};
  // hub 0 plays the identified degree-2 side vertex of every K+_{2,k-1};
  // copy c occupies 1+ck .. 1+(c+1)k-1 with its 2-side first
  for (long long c = 0; c < m; ++c) {
    int p1 = int(1 + c * k), p2 = p1 + 1;
    g.add_edge(p1, p2);
    g.add_edge(0, p1);
    g.add_edge(0, p2);
    for (int j = 2; j < k; ++j) {
      g.add_edge(p1 + j, p1);
      g.add_edge(p1 + j, p2);
    }
  }
  // t extra vertices attach to the 2-side of the first copy
  for (int i = 0; i < t; ++i) {
    int v = int(m * k + 1 + i);
    g.add_edge(v, 1);
    g.add_edge(v, 2);
  }
  return g;
}

Graph build_k_plus_2a(int a) {
  require(a >= 1, "k_plus_2a: a must be >= 1");
  require(a + 2 <= kMaxVertices, "k_plus_2a: exceeds vertex capacity");
  Graph g = Graph::complete_bipartite(2, a);
  g.add_edge(0, 1);
  return g;
}

Graph build_fan_cliques(int k, int t) {
  require(k >= 0, "fan_cliques: k must be >= 0");
  require(t >= 1, "fan_cliques: t must be >= 1");
  if (k == 0) return Graph::complete(4);
  long long v = (long long)(k + 1) * (2 * t + 1);
  require(v <= kMaxVertices, "fan_cliques: exceeds vertex capacity");
  Graph g{static_cast<int>(v)};
  int apex = k;
  std::vector<std::pair<int, int>> bundled;
  if (k == 1) {
    // degenerate fan: one edge carrying 2t bundles
    g.add_edge(0, apex);
    for (int i = 0; i < 2 * t; ++i) bundled.emplace_back(0, apex);
  } else {
    for (int i = 0; i + 1 < k; ++i) {
      g.add_edge(i, i + 1);
      bundled.emplace_back(i, i + 1);
    }
    for (int i = 0; i < k; ++i) g.add_edge(apex, i);
    bundled.emplace_back(apex, 0);
    bundled.emplace_back(apex, k - 1);
    std::vector<std::pair<int, int>> with_t;
    for (auto e : bundled)
      for (int c = 0; c < t; ++c) with_t.push_back(e);
    bundled = with_t;
  }
  int next = k + 1;
  for (auto [a, b] : bundled) {
    int x = next++, y = next++;
    g.add_edge(x, y);
    g.add_edge(x, a);
    g.add_edge(x, b);
    g.add_edge(y, a);
    g.add_edge(y, b);
  }
  return g;
}

Graph build_bowtie_star(int k) {
  require(k >= 1, "bowtie_star: k must be >= 1");
  long long v = 5LL * k + 1;
  require(v <= kMaxVertices, "bowtie_star: exceeds vertex capacity");
  Graph g{static_cast<int>(v)};
  for (int c = 0; c < k; ++c) {
    int base = 1 + 5 * c;
    int center = base, a1 = base + 1, a2 = base + 2, b1 = base + 3, b2 = base + 4;
    g.add_edge(center, a1);
    g.add_edge(center, a2);
    g.add_edge(a1, a2);
    g.add_edge(center, b1);
    g.add_edge(center, b2);
    g.add_edge(b1, b2);
    for (int j = 0; j < 5; ++j) g.add_edge(0, base + j);
  }
  return g;
}

Graph build_clique_star(int h, int t, long long m) {
  require(t + 1 >= 2, "clique_star: t must be >= 1");
  require(h >= t + 1, "clique_star: h must be >= t+1");
  require(m >= 1, "clique_star: m must be >= 1");
  long long v = (long long)(h - t) * m + t - 1;
  require(v >= 1 && v <= kMaxVertices, "clique_star: exceeds vertex capacity");
  Graph g{static_cast<int>(v)};
  std::vector<int> shared(t - 1);
  for (int i = 0; i + 1 < t; ++i) shared[i] = i;
  for (long long c = 0; c < m; ++c) {
    std::vector<int> clique = shared;
    for (int j = 0; j < h - t; ++j) clique.push_back(int(t - 1 + c * (h - t) + j));
    add_clique(g, clique);
  }
  return g;
}

Graph build_witness_25_11() {
  Graph g = Graph::cycle(10);
  for (int i = 0; i < 10; i += 2) g.add_edge(i, (i + 2) % 10);
  return extend(g);
}

Graph extend(const Graph& g) {
  if (g.n() + 1 > kMaxVertices) throw std::invalid_argument("extend: exceeds capacity");
  Graph out(g.n() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < g.n(); ++v) out.add_edge(g.n(), v);
  return out;
}

Graph k_sum(const Graph& g, const Graph& h, const std::vector<int>& map_g,
            const std::vector<int>& map_h,
            const std::vector<std::pair<int, int>>& drop) {
  require(map_g.size() == map_h.size(), "k_sum: map sizes differ");
  size_t k = map_g.size();
  auto check_clique = [&](const Graph& gr, const std::vector<int>& mp, const char* side) {
    uint64_t seen = 0;
    for (int v : mp) {
      require(v >= 0 && v < gr.n(), std::string("k_sum: map vertex out of range on ") + side);
      require(!(seen & bit(v)), std::string("k_sum: repeated map vertex on ") + side);
      seen |= bit(v);
    }
    for (size_t i = 0; i < mp.size(); ++i)
      for (size_t j = i + 1; j < mp.size(); ++j)
        require(gr.has_edge(mp[i], mp[j]),
                std::string("k_sum: mapped set is not a clique on ") + side);
  };
  check_clique(g, map_g, "first graph");
  check_clique(h, map_h, "second graph");

  int extra = h.n() - int(k);
  require(g.n() + extra <= kMaxVertices, "k_sum: exceeds vertex capacity");
  // relabel h: mapped vertices onto map_g, others appended in ascending order
  std::vector<int> relabel(h.n(), -1);
  for (size_t i = 0; i < k; ++i) relabel[map_h[i]] = map_g[i];
  int next = g.n();
  for (int v = 0; v < h.n(); ++v)
    if (relabel[v] < 0) relabel[v] = next++;
  Graph out(g.n() + extra);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(relabel[u], relabel[v]);
  for (auto [u, v] : drop) {
    bool in_clique = false;
    for (size_t i = 0; i < k && !in_clique; ++i)
      for (size_t j = i + 1; j < k && !in_clique; ++j)
        if ((map_g[i] == u && map_g[j] == v) || (map_g[i] == v && map_g[j] == u))
          in_clique = true;
    require(in_clique, "k_sum: dropped edge is not inside the shared clique");
    out.remove_edge(u, v);
  }
  return out;
}

Graph overlap_copies(const Graph& g, const std::vector<int>& clique, int copies) {
  require(copies >= 1, "overlap_copies: need at least one copy");
  for (size_t i = 0; i < clique.size(); ++i)
    for (size_t j = i + 1; j < clique.size(); ++j)
      require(g.has_edge(clique[i], clique[j]), "overlap_copies: set is not a clique");
  int s = int(clique.size());
  int rest = g.n() - s;
  long long total = s + (long long)rest * copies;
  require(total <= kMaxVertices, "overlap_copies: exceeds vertex capacity");
  uint64_t cmask = 0;
  for (int v : clique) cmask |= bit(v);
  // shared clique first, then each copy's remaining vertices ascending
  std::vector<int> pos_in_clique(g.n(), -1);
  for (int i = 0; i < s; ++i) pos_in_clique[clique[i]] = i;
  std::vector<int> others;
  for (int v = 0; v < g.n(); ++v)
    if (!(cmask & bit(v))) others.push_back(v);
  Graph out{static_cast<int>(total)};
  for (int c = 0; c < copies; ++c) {
    auto target = [&](int v) {
      if (pos_in_clique[v] >= 0) return pos_in_clique[v];
      int idx = int(std::lower_bound(others.begin(), others.end(), v) - others.begin());
      return s + c * rest + idx;
    };
    for (auto [u, v] : g.edges()) out.add_edge(target(u), target(v));
  }
  return out;
}

Graph build(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Gkm:
      return build_gkm(int(spec.k), spec.m);
    case Kind::Fkm:
      return build_fkm(int(spec.k), spec.m);
    case Kind::StarOfPlants:
      return build_star_of_plants(int(spec.k), spec.m, int(spec.t));
    case Kind::KPlus2:
      return build_k_plus_2a(int(spec.a));
    case Kind::FanCliques:
      return build_fan_cliques(int(spec.k), int(spec.t));
    case Kind::BowtieStar:
      return build_bowtie_star(int(spec.k));
    case Kind::CliqueStar:
      return build_clique_star(int(spec.h), int(spec.t), spec.m);
    case Kind::Path:
      require(spec.t >= 1 && spec.t <= kMaxVertices, "path: bad length");
      return Graph::path(int(spec.t));
    case Kind::Witness2511:
      return build_witness_25_11();
  }
  throw std::logic_error("build: unknown family");
}

std::string family_name(FamilySpec::Kind kind) {
  using Kind = FamilySpec::Kind;
  switch (kind) {
    case Kind::Gkm: return "gkm";
    case Kind::Fkm: return "fkm";
    case Kind::StarOfPlants: return "star_of_plants";
    case Kind::KPlus2: return "k_plus_2a";
    case Kind::FanCliques: return "fan_cliques";
    case Kind::BowtieStar: return "bowtie_star";
    case Kind::CliqueStar: return "clique_star";
    case Kind::Path: return "path";
    case Kind::Witness2511: return "witness_25_11";
  }
  return "?";
}

ClosedForm closed_form(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  ClosedForm cf;
  switch (spec.kind) {
    case Kind::Gkm: {
      long long k = spec.k, m = spec.m;
      require(k >= 2, "gkm: k must be >= 2");
      long long n = k * (k + 1) + 2;
      require(m >= 0 && m <= n, "gkm: m out of range");
      if (m > n / 2) require((m - n / 2) % 3 == 0, "gkm: bad m");
      cf.v = n + k;
      cf.e = binom2(k) + k * n + m;
      // rho = k - 1/2 + (k + 2 + 2m) / (2(k^2 + 2k + 2))
      cf.rho = Rational(k) - Rational(1, 2) +
               Rational(k + 2 + 2 * m, 2 * (k * k + 2 * k + 2));
      break;
    }
    case Kind::Fkm: {
      long long k = spec.k, m = spec.m;
      require(k >= 2 && m >= 3 && m % 3 == 0, "fkm: bad parameters");
      cf.v = k + m;
      cf.e = binom2(k) + m * (k + 1);
      // rho = k + 1/2 + (m - k^2 - 2k) / (2(k + m))
      cf.rho = Rational(k) + Rational(1, 2) + Rational(m - k * k - 2 * k, 2 * (k + m));
      break;
    }
    case Kind::StarOfPlants: {
      long long k = spec.k, m = spec.m, t = spec.t;
      require(k >= 2 && m >= 1 && t >= 0 && t < k, "star_of_plants: bad parameters");
      cf.v = m * k + 1 + t;
      cf.e = 2 * cf.v - 2 - m;
      cf.rho = Rational(cf.e, cf.v);
      break;
    }
    case Kind::KPlus2: {
      require(spec.a >= 1, "k_plus_2a: bad parameter");
      cf.v = spec.a + 2;
      cf.e = 2 * spec.a + 1;
      cf.rho = Rational(cf.e, cf.v);
      break;
    }
    case Kind::FanCliques: {
      long long k = spec.k, t = spec.t;
      require(k >= 0 && t >= 1, "fan_cliques: bad parameters");
      if (k == 0) {
        cf.v = 4;
        cf.e = 6;
        cf.rho1 = Rational(2);
      } else {
        cf.v = (k + 1) * (2 * t + 1);
        cf.e = (k + 1) * (5 * t + 2) - 3;
        // rho1 = (5t+2)/(2t+1) - (t+1) / ((2t+1)((k+1)(2t+1) - 1))
        cf.rho1 = Rational(5 * t + 2, 2 * t + 1) -
                  Rational(t + 1) / (Rational(2 * t + 1) * Rational((k + 1) * (2 * t + 1) - 1));
      }
      cf.rho = Rational(cf.e, cf.v);
      break;
    }
    case Kind::BowtieStar: {
      long long k = spec.k;
      require(k >= 1, "bowtie_star: bad parameter");
      cf.v = 5 * k + 1;
      cf.e = 11 * k;
      // rho = 2 + (k-2)/(5k+1)
      cf.rho = Rational(2) + Rational(k - 2, 5 * k + 1);
      break;
    }
    case Kind::CliqueStar: {
      long long h = spec.h, t = spec.t, m = spec.m;
      require(t >= 1 && h >= t + 1 && m >= 1, "clique_star: bad parameters");
      cf.v = (h - t) * m + t - 1;
      cf.e = m * (binom2(h - t) + (h - t) * (t - 1)) + binom2(t - 1);
      cf.rho = Rational(cf.e, cf.v);
      break;
    }
    case Kind::Path: {
      require(spec.t >= 1, "path: bad length");
      cf.v = spec.t;
      cf.e = spec.t - 1;
      cf.rho = Rational(cf.e, cf.v);
      break;
    }
    case Kind::Witness2511: {
      cf.v = 11;
      cf.e = 25;
      cf.rho = Rational(25, 11);
      break;
    }
  }
  if (!(cf.rho == Rational::make(cf.e, cf.v)))
    throw std::logic_error("closed_form: density formula disagrees with counts");
  if (cf.v <= kMaxVertices) {
    Graph g = build(spec);
    if (g.n() != cf.v || g.edge_count() != cf.e)
      throw std::logic_error("closed_form: built graph disagrees with closed form");
    if (cf.rho1 && g.n() >= 2 && !(*cf.rho1 == Rational(g.edge_count(), g.n() - 1)))
      throw std::logic_error("closed_form: rho1 disagrees with counts");
  }
  return cf;
}

}  // namespace md
