#include "verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "canonical.hpp"
#include "catalog.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "minor.hpp"
#include "oracles.hpp"
#include "plants.hpp"

namespace md {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

bool iso(const Graph& a, const Graph& b) {
  return canonical_form(a) == canonical_form(b);
}

Graph diamond() {
  Graph g = Graph::complete(4);
  g.remove_edge(0, 1);
  return g;
}

Graph bowtie() { return build_star_of_plants(2, 2, 0); }

bool strictly_balanced(const Graph& g, Check& c, const std::string& label) {
  BalanceReport r = balance_check(g, {BalanceMode::StrictlyMinorBalanced, 0});
  c.expect(r.verdict, label + " not strictly minor-balanced");
  return r.verdict;
}

// ---- criterion bodies --------------------------------------------------

void c1_catalog_order(Check& c) {
  auto entries = enumerate_B(Rational(1), Rational(3, 2), {{}, size_t(5)});
  c.expect(entries.size() == 5, "expected five leading values");
  const Rational want[] = {Rational(1), Rational(6, 5), Rational(5, 4), Rational(9, 7),
                           Rational(4, 3)};
  for (size_t i = 0; i < entries.size() && i < 5; ++i)
    c.expect(entries[i].beta == want[i],
             "value " + std::to_string(i) + " is " + entries[i].beta.str());
  c.note("[1,3/2) opens with 1 then 6/5 5/4 9/7 4/3");
}

void c2_sub_one_slice(Check& c) {
  EnumLimits limits;
  limits.max_n = 100;
  auto entries = enumerate_B(Rational(0), Rational(1), limits);
  c.expect(entries.size() == 100, "expected 100 values, got " + std::to_string(entries.size()));
  for (long long t = 1; t <= (long long)entries.size(); ++t)
    c.expect(entries[size_t(t - 1)].beta == Rational::make(t - 1, t),
             "t=" + std::to_string(t) + " mismatch");
}

void c3_k2_closed_form(Check& c) {
  EnumLimits limits;
  limits.max_n = 200;
  auto entries = enumerate_B(Rational(1), Rational(3, 2), limits);
  std::vector<Rational> got;
  for (const auto& e : entries) got.push_back(e.beta);
  std::vector<Rational> want{Rational(1)};
  for (long long n = 5; n <= 200; n += 2) want.push_back(Rational(3, 2) - Rational(3, 2 * n));
  for (long long n = 4; n <= 200; n += 2) want.push_back(Rational(3, 2) - Rational(1, n));
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  c.expect(got == want, "value sets differ (got " + std::to_string(got.size()) + ", want " +
                            std::to_string(want.size()) + ")");
}

void c4_membership(Check& c) {
  auto r1 = membership(Rational(14, 11));
  c.expect(r1.status == MembershipResult::Status::NotInB, "14/11 should not be a member");
  auto r2 = membership(Rational(20, 13));
  c.expect(r2.status == MembershipResult::Status::InB, "20/13 should be a member");
  if (r2.entry) {
    c.expect(r2.entry->parametrizations.size() == 1, "20/13 should be unique");
    const auto& p = r2.entry->parametrizations.at(0);
    c.expect(p.k == 3 && p.n == 13 && p.t == 0 && p.m == 4, "20/13 parametrization wrong");
  }
  auto r3 = membership(Rational(4, 3));
  c.expect(r3.status == MembershipResult::Status::InB, "4/3 should be a member");
  if (r3.entry)
    c.expect(r3.entry->parametrizations.size() == 2, "4/3 should have two parametrizations");
}

void c5_witnesses(Check& c) {
  Graph w54 = witness(*membership(Rational(5, 4)).entry);
  c.expect(iso(w54, diamond()), "witness(5/4) is not the diamond");
  Graph w65 = witness(*membership(Rational(6, 5)).entry);
  c.expect(iso(w65, bowtie()), "witness(6/5) is not the bowtie");
  strictly_balanced(w54, c, "witness(5/4)");
  strictly_balanced(w65, c, "witness(6/5)");

  Graph w = witness(*membership(Rational(20, 13)).entry);
  c.expect(w.n() == 13 && w.edge_count() == 20, "witness(20/13) size wrong");
  auto blks = blocks(w);
  c.expect(blks.size() == 4, "witness(20/13) should have 4 blocks");
  for (const auto& b : blks) {
    uint64_t mask = 0;
    for (int v : b) mask |= bit(v);
    c.expect(iso(w.induced(mask), diamond()), "a block is not a diamond");
  }
  strictly_balanced(w, c, "witness(20/13)");
}

void c6_gkm_family(Check& c) {
  c.expect(density(build_gkm(2, 0)) == Rational(17, 10), "rho(G_2(0)) != 17/10");
  c.expect(density(build_gkm(2, 3)) == Rational(2), "rho(G_2(3)) != 2");
  c.expect(density(build_gkm(2, 7)) == Rational(12, 5), "rho(G_2(7)) != 12/5");
  // b_2 from the closed form k + 1/2 - (k-2+2*delta1)/(2(k+n)) with delta1 = 1
  Rational b2 = Rational(2) + Rational(1, 2) - Rational(2 - 2 + 2 * 1, 2 * (2 + 8));
  c.expect(b2 == Rational(12, 5), "b_2 formula mismatch");
  for (long long m = 0; m < 4; ++m)
    c.expect(closed_form(FamilySpec::gkm(2, m + 1)).rho - closed_form(FamilySpec::gkm(2, m)).rho ==
                 Rational(1, 10),
             "unit step 1/10 fails at m=" + std::to_string(m));
  for (long long m : {0LL, 4LL, 7LL}) {
    BalanceReport r = balance_check(build_gkm(2, m), {BalanceMode::MinorBalanced, 0});
    c.expect(r.verdict, "G_2(" + std::to_string(m) + ") not minor-balanced");
  }
}

void c7_fkm_family(Check& c) {
  Graph f29 = build_fkm(2, 9);
  c.expect(f29.n() == 11 && f29.edge_count() == 28, "F_2(9) size wrong");
  for (int k = 2; k <= 6; ++k)
    for (long long m = 3; m <= 30; m += 3) {
      ClosedForm cf = closed_form(FamilySpec::fkm(k, m));  // build-checked inside
      c.expect(cf.rho == Rational(k) + Rational(1, 2) +
                             Rational(m - (long long)k * k - 2 * k, 2 * (k + m)),
               "F closed form mismatch");
    }
  for (long long k = 2; k <= 6; ++k) {
    long long n = k * (k + 1) + 2;
    Rational g_step(1, k * k + 2 * k + 2);
    for (long long m = 0; m < n / 2; ++m)
      c.expect(closed_form(FamilySpec::gkm(k, m + 1)).rho -
                       closed_form(FamilySpec::gkm(k, m)).rho ==
                   g_step,
               "G mesh step wrong at k=" + std::to_string(k));
    c.expect(g_step < Rational(3, k * k), "G mesh bound fails");
    long long n2 = n - (n % 3 == 0 ? 0 : n % 3);  // largest multiple of 3 <= n
    for (long long m = n2; m <= n2 + 30; m += 3) {
      Rational step = closed_form(FamilySpec::fkm(k, m + 3)).rho -
                      closed_form(FamilySpec::fkm(k, m)).rho;
      c.expect(Rational(0) <= step && step < Rational(3, 2 * k * k),
               "F mesh bound fails at k=" + std::to_string(k) + " m=" + std::to_string(m));
    }
  }
}

void c8_fan_cliques(Check& c) {
  ClosedForm h31 = closed_form(FamilySpec::fan_cliques(3, 1));
  c.expect(h31.rho1 && *h31.rho1 == Rational(25, 11), "rho1(H_{3,1}) != 25/11");
  c.expect(t_density(build_fan_cliques(3, 1), 1) == Rational(25, 11),
           "t_density disagrees for H_{3,1}");
  ClosedForm h32 = closed_form(FamilySpec::fan_cliques(3, 2));
  c.expect(h32.rho1 && *h32.rho1 == Rational(45, 19), "rho1(H_{3,2}) != 45/19");
  for (auto [k, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    BalanceReport r =
        balance_check(build_fan_cliques(k, t), {BalanceMode::StrictlyTMinorBalanced, 1});
    c.expect(r.verdict, "H_{" + std::to_string(k) + "," + std::to_string(t) +
                            "} has a 1-dense proper minor");
  }
}

void c9_witness_25_11(Check& c, bool deep_part) {
  Graph w = build_witness_25_11();
  if (!deep_part) {
    c.expect(w.n() == 11 && w.edge_count() == 25, "witness size wrong");
    Graph base = w.delete_vertex(10);
    c.expect(base.n() == 10 && base.edge_count() == 15, "base size wrong");
    c.expect(density(base) == Rational(3, 2), "base density wrong");
    BalanceReport r = balance_check(base, {BalanceMode::MinorBalanced, 0});
    c.expect(r.verdict, "10-vertex base not minor-balanced");
  } else {
    strictly_balanced(w, c, "25/11 witness");
  }
}

void c10_bowtie_star(Check& c, bool deep_part) {
  if (!deep_part) {
    Graph h1 = build_bowtie_star(1);
    c.expect(h1.n() == 6 && density(h1) == Rational(11, 6), "bowtie_star(1) wrong");
    strictly_balanced(h1, c, "bowtie_star(1)");
    for (long long k = 1; k <= 6; ++k)
      c.expect(closed_form(FamilySpec::bowtie_star(k)).rho ==
                   Rational(2) + Rational(k - 2, 5 * k + 1),
               "density formula fails at k=" + std::to_string(k));
    c.expect(density(build_bowtie_star(2)) == Rational(2), "bowtie_star(2) density wrong");
  } else {
    strictly_balanced(build_bowtie_star(2), c, "bowtie_star(2)");
  }
}

void c11_crosscheck(Check& c, int jobs) {
  ScanOptions opts;
  opts.jobs = jobs;
  CrosscheckReport report = crosscheck(7, opts);
  c.expect(!report.partial, "crosscheck ran out of budget");
  c.expect(report.catalog_misses.empty(),
           std::to_string(report.catalog_misses.size()) + " catalog misses");
  c.expect(report.witness_misses.empty(),
           std::to_string(report.witness_misses.size()) + " witness misses");

  // lemma sweeps over every graph with at most 7 vertices
  long long checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs_vec(n, false)) {
      ++checked;
      BalanceReport one = balance_check(g, {BalanceMode::TMinorBalanced, 1});
      if (one.verdict) {
        c.expect(is_connected(g), "a 1-minor-balanced graph is disconnected");
        BalanceReport strict0 = balance_check(g, {BalanceMode::StrictlyMinorBalanced, 0});
        c.expect(strict0.verdict, "a 1-minor-balanced graph is not strictly minor-balanced");
      }
      BalanceReport strict1 = balance_check(g, {BalanceMode::StrictlyTMinorBalanced, 1});
      if (strict1.verdict)
        c.expect(g.n() == 2 || connectivity(g) >= 2,
                 "a strictly 1-minor-balanced graph is neither K_2 nor 2-connected");
      if (g.n() >= 5) {
        BalanceReport strict2 = balance_check(g, {BalanceMode::StrictlyTMinorBalanced, 2});
        if (strict2.verdict)
          c.expect(connectivity(g) >= 3,
                   "a strictly 2-minor-balanced graph on >= 5 vertices is not 3-connected");
      }
    }
  }
  c.note("lemma sweeps over " + std::to_string(checked) + " graphs");
}

void c12_oracle_equivalence(Check& c) {
  long long count = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs_vec(n, false)) {
      ++count;
      Rational full = oracle::densest_minor_density(g);
      Rational restricted = oracle::densest_minor_density_no_edge_delete(g);
      c.expect(full == restricted, "edge-deletion elision changes the maximum");
      DensestResult dm = densest_minor(g);
      c.expect(dm.rho == full, "densest_minor disagrees with the closure oracle");
      if (n >= 2) {
        auto scan = oracle::plant_scan_all_orderings(g);
        PlantResult pr = plant_classify(g);
        c.expect(scan.is_plant == (pr.cls != PlantClass::NotPlant),
                 "plant recognition disagrees with the all-orderings oracle");
        if (scan.is_plant) {
          bool eq = g.edge_count() == 2 * g.n() - 3;
          c.expect(eq == scan.some_ordering_all_two && eq != scan.some_ordering_with_surplus,
                   "plant classification is ordering-dependent");
          c.expect((pr.cls == PlantClass::PlantEq) == eq, "plant split disagrees");
        }
      }
    }
  }
  c.note("compared on " + std::to_string(count) + " graphs");
}

void c13_identities(Check& c) {
  std::mt19937_64 rng(20250809);
  for (int t = 0; t <= 2; ++t) {
    int done = 0;
    while (done < 500) {
      int n = 1 + int(rng() % 20);
      Graph g(n);
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      double p = coin(rng);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng) < p) g.add_edge(u, v);
      Rational rt = t_density(g, t);
      if (rt.is_zero()) continue;
      ++done;
      c.expect(t_density(extend(g), t + 1) == rt + Rational(1),
               "extension identity fails at t=" + std::to_string(t));
    }
  }
  // ordering of t-densities under the edge-count hypothesis
  long long tested = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs_vec(n, false))
      for (int t = 2; t <= 4; ++t) {
        if (g.n() < t + 1) continue;
        long long e2 = 2LL * g.edge_count();
        if (e2 < (long long)(t - 1) * (2 * g.n() - t)) continue;
        ++tested;
        for (int s = 1; s <= t; ++s) {
          Rational hi = t_density(g, s), lo = t_density(g, s - 1);
          if (s == t)
            c.expect(hi >= lo, "t-density ordering fails (>=)");
          else
            c.expect(hi > lo, "t-density ordering fails (>)");
        }
      }
  c.note("ordering hypothesis met " + std::to_string(tested) + " times");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, std::ostream& os) {
  struct Item {
    int id;
    std::string name;
    bool deep;
    std::function<void(Check&)> body;
  };
  std::vector<Item> items = {
      {1, "catalog order on [1,3/2)", false, c1_catalog_order},
      {2, "sub-one slice (t <= 100)", false, c2_sub_one_slice},
      {3, "k=2 closed form (n <= 200)", false, c3_k2_closed_form},
      {4, "membership decisions", false, c4_membership},
      {5, "witness graphs and strict balance", false, c5_witnesses},
      {6, "G family densities and balance", false, c6_gkm_family},
      {7, "F family closed forms and mesh", false, c7_fkm_family},
      {8, "fan-clique 1-densities", false, c8_fan_cliques},
      {9, "25/11 witness (base)", false, [](Check& c) { c9_witness_25_11(c, false); }},
      {9, "25/11 witness strict balance [deep]", true,
       [](Check& c) { c9_witness_25_11(c, true); }},
      {10, "bowtie stars", false, [](Check& c) { c10_bowtie_star(c, false); }},
      {10, "bowtie_star(2) strict balance [deep]", true,
       [](Check& c) { c10_bowtie_star(c, true); }},
      {11, "crosscheck at n=7 plus lemma sweeps", false,
       [&](Check& c) { c11_crosscheck(c, opts.jobs); }},
      {12, "oracle equivalence at n <= 6", false, c12_oracle_equivalence},
      {13, "extension identity and density ordering", false, c13_identities},
  };

  std::vector<CriterionResult> results;
  for (const Item& item : items) {
    CriterionResult r;
    r.id = item.id;
    r.name = item.name;
    bool wanted = opts.only_criterion ? *opts.only_criterion == item.id : true;
    if (item.deep && !(opts.deep || opts.only_deep)) wanted = false;
    if (!item.deep && opts.only_deep) wanted = false;
    if (!wanted) {
      r.ran = false;
      results.push_back(r);
      continue;
    }
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      item.body(check);
    } catch (const std::exception& ex) {
      check.ok = false;
      check.note(std::string("exception: ") + ex.what());
    }
    r.ran = true;
    r.pass = check.ok;
    r.detail = check.detail.str();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(r);
    os << "criterion " << r.id << (item.deep ? " (deep)" : "") << ": "
       << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    char buf[32];
    snprintf(buf, sizeof buf, "  [%.2fs]", r.seconds);
    os << buf;
    if (!r.detail.empty()) os << "  -- " << r.detail;
    os << "\n" << std::flush;
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (r.ran && !r.pass) return false;
  return true;
}

}  // namespace md
