#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "canonical.hpp"
#include "catalog.hpp"
#include "json.hpp"

namespace md {

namespace {

// Extends parent by one vertex adjacent to the mask.  Parent vertices keep
// their labels; the new vertex is the highest label.
Graph with_new_vertex(const Graph& parent, uint64_t mask) {
  Graph child(parent.n() + 1);
  for (auto [u, v] : parent.edges()) child.add_edge(u, v);
  for_each_bit(mask, [&](int v) { child.add_edge(parent.n(), v); });
  return child;
}

void grow(const Graph& parent, int target, const std::function<void(const Graph&)>& sink) {
  if (parent.n() == target) {
    sink(parent);
    return;
  }
  int added = parent.n();
  std::set<std::string> seen;  // marked codes: one child per neighborhood orbit
  uint64_t limit = uint64_t{1} << added;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    Graph child = with_new_vertex(parent, mask);
    std::string marked_new = canonical_form_marked(child, added);
    if (!seen.insert(marked_new).second) continue;
    CanonicalResult canon = canonical_form_full(child);
    int last = canon.labeling.back();
    // keep the child only if the new vertex could be the canonical deletion
    // point, i.e. shares an automorphism orbit with the canonically last one
    bool accept = (last == added) ||
                  (canonical_form_marked(child, last) == marked_new);
    if (accept) grow(child, target, sink);
  }
}

}  // namespace

void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&)>& sink) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("enumerate_graphs: n must be in 1..10");
  Graph k1(1);
  grow(k1, n, [&](const Graph& g) {
    if (!connected_only || is_connected(g)) sink(g);
  });
}

std::vector<Graph> enumerate_graphs_vec(int n, bool connected_only) {
  std::vector<Graph> out;
  enumerate_graphs(n, connected_only, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

struct ScanItem {
  Graph g;
  bool hit = false;
  bool flagged = false;
  ScanHit data;
};

void classify(ScanItem& item, const BalanceQuery& query, const SearchOptions& search) {
  try {
    BalanceReport report = balance_check(item.g, query, search);
    if (report.verdict) {
      item.hit = true;
      Graph canon = canonical_relabel(item.g);
      item.data.g6 = emit_graph6(canon);
      item.data.n = item.g.n();
      item.data.e = item.g.edge_count();
      item.data.rho = density(item.g);
      item.data.connected = is_connected(item.g);
    }
  } catch (const BudgetExceeded&) {
    item.flagged = true;
    item.data.g6 = emit_graph6(canonical_relabel(item.g));
  }
}

}  // namespace

ScanReport scan_balanced(int max_n, BalanceQuery query, const ScanOptions& opts) {
  auto started = std::chrono::steady_clock::now();
  ScanReport report;
  report.max_n = max_n;
  report.query = query;
  report.connected_only = opts.connected_only;
  report.totals.assign(size_t(std::max(max_n, 0)) + 1, 0);

  std::vector<Graph> batch;
  if (opts.source) {
    for (const Graph& g : read_graph6_stream(*opts.source)) {
      if (g.n() == 0) continue;
      if (g.n() > max_n)
        throw std::invalid_argument("scan: stream graph larger than max_n");
      if (opts.connected_only && !is_connected(g)) continue;
      batch.push_back(g);
    }
  } else {
    if (max_n < 1) throw std::invalid_argument("scan: max_n must be >= 1");
    for (int n = 1; n <= max_n; ++n)
      enumerate_graphs(n, opts.connected_only,
                       [&](const Graph& g) { batch.push_back(g); });
  }

  std::vector<ScanItem> items(batch.size());
  for (size_t i = 0; i < batch.size(); ++i) items[i].g = batch[i];

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (auto& item : items) classify(item, query, opts.search);
  } else {
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = cursor.fetch_add(1);
        if (i >= items.size()) return;
        classify(items[i], query, opts.search);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& item : items) {
    report.totals[size_t(item.g.n())] += 1;
    if (item.flagged)
      report.flagged.push_back(item.data.g6);
    else if (item.hit)
      report.hits.push_back(item.data);
  }
  std::sort(report.hits.begin(), report.hits.end(), [](const ScanHit& a, const ScanHit& b) {
    return std::tie(a.n, a.g6) < std::tie(b.n, b.g6);
  });
  std::sort(report.flagged.begin(), report.flagged.end());
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

CrosscheckReport crosscheck(int max_n, const ScanOptions& opts) {
  if (max_n < 1 || max_n > 10)
    throw std::invalid_argument("crosscheck: max_n must be in 1..10");
  CrosscheckReport report;
  report.max_n = max_n;

  ScanReport scan = scan_balanced(max_n, BalanceQuery{BalanceMode::MinorBalanced, 0}, opts);
  report.partial = scan.partial();

  std::vector<Rational> found;
  for (const ScanHit& hit : scan.hits)
    if (hit.rho < Rational(2)) found.push_back(hit.rho);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  report.densities_found = found;

  for (const Rational& rho : found)
    if (membership(rho).status != MembershipResult::Status::InB)
      report.catalog_misses.push_back(rho);

  // catalog entries whose witness fits within max_n vertices must show up
  std::vector<CatalogEntry> expected;
  EnumLimits limits;
  limits.max_n = max_n;
  for (const CatalogEntry& e : enumerate_B(Rational(0), Rational(2) - Rational(1, 1000000), limits))
    expected.push_back(e);
  for (const CatalogEntry& e : expected) {
    if (!std::binary_search(found.begin(), found.end(), e.beta))
      report.witness_misses.push_back(e.beta);
  }
  return report;
}

std::string scan_report_json(const ScanReport& report) {
  std::string out;
  for (const ScanHit& hit : report.hits) {
    nlohmann::json j;
    j["type"] = "hit";
    j["graph6"] = hit.g6;
    j["v"] = hit.n;
    j["e"] = hit.e;
    j["rho"] = hit.rho.str();
    j["connected"] = hit.connected;
    out += j.dump();
    out += '\n';
  }
  nlohmann::json summary;
  summary["type"] = "scan_summary";
  summary["max_n"] = report.max_n;
  summary["mode"] = int(report.query.mode);
  summary["t"] = report.query.t;
  summary["connected_only"] = report.connected_only;
  summary["totals"] = report.totals;
  summary["hit_count"] = report.hits.size();
  summary["partial"] = report.partial();
  summary["flagged"] = report.flagged;
  out += summary.dump();
  out += '\n';
  return out;
}

std::string crosscheck_report_json(const CrosscheckReport& report) {
  auto strs = [](const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Rational& r : v) out.push_back(r.str());
    return out;
  };
  nlohmann::json j;
  j["type"] = "crosscheck";
  j["max_n"] = report.max_n;
  j["partial"] = report.partial;
  j["densities_found"] = strs(report.densities_found);
  j["catalog_misses"] = strs(report.catalog_misses);
  j["witness_misses"] = strs(report.witness_misses);
  j["pass"] = report.pass();
  return j.dump() + "\n";
}

namespace {

const char* mode_label(BalanceMode mode) {
  switch (mode) {
    case BalanceMode::MinorBalanced: return "minor_balanced";
    case BalanceMode::StrictlyMinorBalanced: return "strictly_minor_balanced";
    case BalanceMode::TMinorBalanced: return "t_minor_balanced";
    case BalanceMode::StrictlyTMinorBalanced: return "strictly_t_minor_balanced";
  }
  return "?";
}

}  // namespace

void print_scan_summary(const ScanReport& report, std::ostream& os) {
  os << "scan mode=" << mode_label(report.query.mode);
  if (report.query.t_mode()) os << " t=" << report.query.t;
  os << " max_n=" << report.max_n << (report.connected_only ? " connected" : "")
     << "\n";
  os << "  n  classes  hits\n";
  for (int n = 1; n < int(report.totals.size()); ++n) {
    long long hits = 0;
    for (const ScanHit& h : report.hits)
      if (h.n == n) ++hits;
    os << "  " << n << "  " << report.totals[n] << "  " << hits << "\n";
  }
  os << "total hits: " << report.hits.size() << ", flagged: " << report.flagged.size()
     << (report.partial() ? " (PARTIAL)" : "") << ", " << report.seconds << "s\n";
}

void print_crosscheck_summary(const CrosscheckReport& report, std::ostream& os) {
  os << "crosscheck max_n=" << report.max_n << "\n";
  os << "  densities found: " << report.densities_found.size() << "\n";
  os << "  catalog misses:  " << report.catalog_misses.size();
  for (const Rational& r : report.catalog_misses) os << " " << r.str();
  os << "\n  witness misses:  " << report.witness_misses.size();
  for (const Rational& r : report.witness_misses) os << " " << r.str();
  os << "\n  " << (report.pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace md
