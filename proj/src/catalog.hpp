#pragma once

#include <optional>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace md {

enum class EntryKind { SubOne, IntervalEndpoint, Interior, Two };

struct Parametrization {
  int k = 0;
  long long n = 0;
  int t = 0;
  long long m = 0;
};

// One member of the catalog of critical densities in [0, 2].
//   SubOne(t):            beta = (t-1)/t,            witness the path P_t
//   IntervalEndpoint(k):  beta = 2 - 1/(k-1),        witness K+_{2,3k-5}
//   Interior(k,n,t,m):    beta = 2 - 1/k - (2k-t-1)/(kn), n = mk+1+t with
//                         m >= 1, 0 <= t <= k-1, n > (2k-1-t)(k-1);
//                         witness the star of plants on n vertices
//   Two:                  beta = 2,                  witness K_5
struct CatalogEntry {
  Rational beta;
  EntryKind kind = EntryKind::Two;
  int k = 0;
  long long n = 0;
  int t = 0;
  long long m = 0;
  std::vector<Parametrization> parametrizations;  // all tuples giving beta
  FamilySpec witness_spec;
};

std::string kind_name(EntryKind kind);

struct EnumLimits {
  // Interior entries keep only parametrizations with n <= max_n, and SubOne
  // entries need t <= max_n (the witness path has t vertices).  Without a
  // limit, enumeration near an accumulation point is infinite.
  std::optional<long long> max_n;
  std::optional<size_t> max_count;
};

// Members of the catalog in [lo, hi), ascending, each value exactly once
// with every parametrization recorded.  Requires 0 <= lo < hi < 2.
std::vector<CatalogEntry> enumerate_B(const Rational& lo, const Rational& hi,
                                      const EnumLimits& limits = {});

// Least member strictly above x within [0, 2]; 2 itself is always available.
CatalogEntry next_above(const Rational& x);
std::optional<CatalogEntry> next_above_limited(const Rational& x,
                                               std::optional<long long> max_n);
Rational gap(const Rational& x);

struct KnownAbove2 {
  Rational beta;
  std::optional<FamilySpec> witness;  // present when the value is achieved
  std::string note;
  bool conjectured_least_in_B = false;
  bool conjectured_least_in_B2 = false;
};

struct MembershipResult {
  enum class Status { InB, NotInB, UnknownAbove2 } status;
  std::optional<CatalogEntry> entry;     // for InB
  std::optional<KnownAbove2> known_hit;  // for documented values above 2
};

// Exact decision for q in [0, 2]; above 2 only documented members are looked
// up (the catalog there is not characterized).
MembershipResult membership(const Rational& q);

// Materalizes the witness graph; its density equals entry.beta exactly.
Graph witness(const CatalogEntry& entry);

// {2 - 1/k : 1 <= k <= k_max} plus {2}; empty below 1.  The two slices agree.
std::vector<Rational> slice_B2_upto2(int k_max);
std::vector<Rational> slice_Bprime_1_2(int k_max);

// Least two critical densities when all excluded minors are 3-connected.
std::vector<Rational> b3_least_values();

// (h + t - 3) / 2 for classes whose excluded minors are t-connected with at
// least h vertices each.
Rational lower_bound_t_connected(int h, int t);

struct BtBounds {
  Rational lo, hi;
  bool exact = false;
};

// min B_t: the exact point t-1 for t <= 8, the interval [t-1, 2t-2] beyond.
BtBounds min_Bt_bounds(int t);

// Maximum edge count over n-vertex forests of paths with at most t vertices
// per component: n - ceil(n/t).
long long max_edges_path_forest(long long n, long long t);

// Deterministic exports; witness graph6 present when the graph fits the
// 64-vertex capacity.
std::string entry_to_json(const CatalogEntry& entry);
std::string entry_to_csv(const CatalogEntry& entry);
std::string csv_header();

}  // namespace md
