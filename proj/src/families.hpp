#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace md {

// Parametrized recipe for one of the built-in graph families.  Catalog
// entries carry these as witness recipes; `build` materializes the graph.
struct FamilySpec {
  enum class Kind {
    Gkm,           // k-clique joined to a layer with a matching/triangle mix
    Fkm,           // m/3 cliques on k+3 vertices sharing k common vertices
    StarOfPlants,  // K+_{2,k-1} copies glued at a hub, t extra apex vertices
    KPlus2,        // K_{2,a} plus the edge inside the 2-side
    FanCliques,    // fan over a path with K_4 bundles on the outer edges
    BowtieStar,    // k bowties plus one universal vertex
    CliqueStar,    // m cliques K_{h-1} overlapping in t-1 vertices
    Path,
    Witness2511,   // chorded 10-cycle plus a universal vertex
  };
  Kind kind = Kind::Path;
  long long k = 0, m = 0, t = 0, a = 0, h = 0;

  static FamilySpec gkm(long long k, long long m) { return {Kind::Gkm, k, m, 0, 0, 0}; }
  static FamilySpec fkm(long long k, long long m) { return {Kind::Fkm, k, m, 0, 0, 0}; }
  static FamilySpec star_of_plants(long long k, long long m, long long t) {
    return {Kind::StarOfPlants, k, m, t, 0, 0};
  }
  static FamilySpec k_plus_2a(long long a) { return {Kind::KPlus2, 0, 0, 0, a, 0}; }
  static FamilySpec fan_cliques(long long k, long long t) {
    return {Kind::FanCliques, k, 0, t, 0, 0};
  }
  static FamilySpec bowtie_star(long long k) { return {Kind::BowtieStar, k, 0, 0, 0, 0}; }
  static FamilySpec clique_star(long long h, long long t, long long m) {
    return {Kind::CliqueStar, 0, m, t, 0, h};
  }
  static FamilySpec path(long long t) { return {Kind::Path, 0, 0, t, 0, 0}; }
  static FamilySpec witness_25_11() { return {Kind::Witness2511, 0, 0, 0, 0, 0}; }
};

std::string family_name(FamilySpec::Kind kind);

struct ClosedForm {
  long long v = 0;
  long long e = 0;
  Rational rho;
  std::optional<Rational> rho1;  // present for FanCliques
};

Graph build_gkm(int k, long long m);
Graph build_fkm(int k, long long m);
Graph build_star_of_plants(int k, long long m, int t);
Graph build_k_plus_2a(int a);
Graph build_fan_cliques(int k, int t);
Graph build_bowtie_star(int k);
Graph build_clique_star(int h, int t, long long m);
Graph build_witness_25_11();

// G plus a universal vertex.
Graph extend(const Graph& g);

// Glues g and h on cliques map_g / map_h (position i identified with
// position i), then deletes the `drop` edges inside the shared clique.
// Empty maps give the disjoint union.
Graph k_sum(const Graph& g, const Graph& h, const std::vector<int>& map_g,
            const std::vector<int>& map_h,
            const std::vector<std::pair<int, int>>& drop = {});

// `copies` copies of g identified on the clique S (kept first in the output).
Graph overlap_copies(const Graph& g, const std::vector<int>& clique, int copies);

Graph build(const FamilySpec& spec);

// Exact vertex/edge/density values from the family closed forms, verified
// against the built graph whenever it fits in the vertex capacity.
ClosedForm closed_form(const FamilySpec& spec);

}  // namespace md
