#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "minor.hpp"
#include "rational.hpp"

namespace md {

// Streams one representative per isomorphism class on exactly n vertices.
// Canonical-augmentation generation: a child is kept only when its new
// vertex lies in the automorphism orbit of the canonically last vertex, so
// no cross-level dedup storage is needed.
void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&)>& sink);
std::vector<Graph> enumerate_graphs_vec(int n, bool connected_only);

struct ScanHit {
  std::string g6;  // canonical graph6
  int n = 0;
  int e = 0;
  Rational rho;
  bool connected = false;
};

struct ScanOptions {
  int jobs = 1;
  SearchOptions search;
  bool connected_only = false;
  // replaces internal enumeration when set (one graph6 per line)
  std::istream* source = nullptr;
};

struct ScanReport {
  int max_n = 0;
  BalanceQuery query;
  bool connected_only = false;
  std::vector<ScanHit> hits;           // sorted by (n, graph6)
  std::vector<long long> totals;       // totals[n] = classes examined
  std::vector<std::string> flagged;    // graphs whose check blew the budget
  double seconds = 0;                  // human summary only, not serialized

  bool partial() const { return !flagged.empty(); }
};

// Classifies every isomorphism class with at most max_n vertices under the
// given balance mode.  Budget overruns flag the graph and the scan goes on.
ScanReport scan_balanced(int max_n, BalanceQuery query, const ScanOptions& opts = {});

struct CrosscheckReport {
  int max_n = 0;
  bool partial = false;
  std::vector<Rational> densities_found;  // of minor-balanced graphs, in [0,2)
  std::vector<Rational> catalog_misses;   // found but rejected by membership
  std::vector<Rational> witness_misses;   // catalog values missing a discovery

  bool pass() const {
    return !partial && catalog_misses.empty() && witness_misses.empty();
  }
};

// Discovered minor-balanced densities must all be catalog members, and every
// catalog value whose witness fits in max_n vertices must be discovered.
CrosscheckReport crosscheck(int max_n, const ScanOptions& opts = {});

std::string scan_report_json(const ScanReport& report);
std::string crosscheck_report_json(const CrosscheckReport& report);
void print_scan_summary(const ScanReport& report, std::ostream& os);
void print_crosscheck_summary(const CrosscheckReport& report, std::ostream& os);

}  // namespace md
