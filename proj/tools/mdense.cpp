// mdense: exact-arithmetic toolkit for critical densities of minor-closed
// graph classes.  Exit codes: 0 success / verdict true, 1 verdict false,
// 2 usage error, 3 search budget exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "canonical.hpp"
#include "catalog.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "minor.hpp"
#include "plants.hpp"
#include "rational.hpp"
#include "verify.hpp"

namespace {

using md::BalanceMode;
using md::Graph;
using md::Rational;

struct GlobalOpts {
  uint64_t budget = 100'000'000;
  int jobs = 1;
  bool json = false;
};

md::SearchOptions search_options(const GlobalOpts& g) {
  md::SearchOptions o;
  o.budget = g.budget;
  return o;
}

// "-" means stdin (one graph6 per line); anything else is a graph6 literal.
std::vector<Graph> input_graphs(const std::string& arg) {
  if (arg == "-") return md::read_graph6_stream(std::cin);
  return {md::parse_graph6(arg)};
}

nlohmann::json ops_json(const std::vector<md::MinorOp>& ops) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& op : ops) arr.push_back(md::op_to_string(op));
  return arr;
}

int cmd_density(const std::string& arg, std::optional<int> t) {
  for (const Graph& g : input_graphs(arg)) {
    Rational value = t ? md::t_density(g, *t) : md::density(g);
    std::cout << value.str() << "\n";
  }
  return 0;
}

int cmd_balanced(const std::string& arg, bool strict, std::optional<int> t,
                 const GlobalOpts& global) {
  md::BalanceQuery query;
  if (t) {
    query.mode = strict ? BalanceMode::StrictlyTMinorBalanced : BalanceMode::TMinorBalanced;
    query.t = *t;
  } else {
    query.mode = strict ? BalanceMode::StrictlyMinorBalanced : BalanceMode::MinorBalanced;
  }
  int exit_code = 0;
  for (const Graph& g : input_graphs(arg)) {
    md::BalanceReport report = md::balance_check(g, query, search_options(global));
    if (global.json) {
      nlohmann::json j;
      j["verdict"] = report.verdict;
      j["strict"] = strict;
      j["t"] = t ? nlohmann::json(*t) : nlohmann::json();
      j["explored"] = report.explored;
      j["positivity_failed"] = report.positivity_failed;
      if (report.counterexample) {
        j["counterexample"] = {
            {"graph6", md::emit_graph6(report.counterexample->minor)},
            {"value", report.counterexample->value.str()},
            {"ops", ops_json(report.counterexample->ops)},
        };
      }
      std::cout << j.dump() << "\n";
    } else if (report.verdict) {
      std::cout << "balanced\n";
    } else if (report.positivity_failed) {
      std::cout << "not balanced: rho_" << query.t << " is 0\n";
    } else {
      const auto& ce = *report.counterexample;
      std::cout << "not balanced: minor " << md::emit_graph6(ce.minor) << " has value "
                << ce.value.str() << "\n";
    }
    if (!report.verdict) exit_code = 1;
  }
  return exit_code;
}

int cmd_plant(const std::string& arg, std::optional<int> cover_k) {
  int exit_code = 0;
  for (const Graph& g : input_graphs(arg)) {
    if (cover_k) {
      bool all = true;
      for (auto [u, v, ok] : md::edge_plant_cover(g, *cover_k)) {
        std::cout << u << "-" << v << " " << (ok ? "covered" : "uncovered") << "\n";
        all = all && ok;
      }
      if (!all) exit_code = 1;
      continue;
    }
    md::PlantResult r = md::plant_classify(g);
    switch (r.cls) {
      case md::PlantClass::NotPlant:
        std::cout << "not a 2-plant\n";
        exit_code = 1;
        break;
      case md::PlantClass::PlantEq:
      case md::PlantClass::PlantPlus: {
        std::cout << (r.cls == md::PlantClass::PlantEq ? "2=-plant" : "2+-plant")
                  << " ordering";
        for (int v : r.cert->ordering) std::cout << " " << v;
        std::cout << "\n";
        break;
      }
    }
  }
  return exit_code;
}

int cmd_minor_test(const std::string& h_arg, const std::string& g_arg,
                   const GlobalOpts& global) {
  Graph h = md::parse_graph6(h_arg);
  Graph g = g_arg == "-" ? md::read_graph6_stream(std::cin).at(0) : md::parse_graph6(g_arg);
  auto cert = md::is_minor(h, g, search_options(global));
  if (!cert) {
    std::cout << "not a minor\n";
    return 1;
  }
  if (global.json) {
    nlohmann::json j;
    j["minor"] = true;
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : cert->branch_sets) sets.push_back(s);
    j["branch_sets"] = sets;
    nlohmann::json wits = nlohmann::json::array();
    for (const auto& w : cert->edge_witnesses)
      wits.push_back({{"h_edge", {w[0], w[1]}}, {"g_edge", {w[2], w[3]}}});
    j["edge_witnesses"] = wits;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "minor; branch sets:";
    for (size_t i = 0; i < cert->branch_sets.size(); ++i) {
      std::cout << " " << i << ":{";
      for (size_t j = 0; j < cert->branch_sets[i].size(); ++j)
        std::cout << (j ? "," : "") << cert->branch_sets[i][j];
      std::cout << "}";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_minor_densest(const std::string& arg, const GlobalOpts& global) {
  for (const Graph& g : input_graphs(arg)) {
    md::DensestResult r = md::densest_minor(g, search_options(global));
    std::cout << md::emit_graph6(md::canonical_relabel(r.minor)) << " " << r.rho.str()
              << "\n";
  }
  return 0;
}

md::FamilySpec family_from_cli(const std::string& name, long long k, long long m,
                               long long t, long long a, long long h) {
  using Kind = md::FamilySpec::Kind;
  if (name == "gkm") return md::FamilySpec::gkm(k, m);
  if (name == "fkm") return md::FamilySpec::fkm(k, m);
  if (name == "star-of-plants") return md::FamilySpec::star_of_plants(k, m, t);
  if (name == "k-plus-2a") return md::FamilySpec::k_plus_2a(a);
  if (name == "fan-cliques") return md::FamilySpec::fan_cliques(k, t);
  if (name == "bowtie-star") return md::FamilySpec::bowtie_star(k);
  if (name == "clique-star") return md::FamilySpec::clique_star(h, t, m);
  if (name == "path") return md::FamilySpec::path(t);
  if (name == "witness-25-11") return md::FamilySpec::witness_25_11();
  (void)Kind::Path;
  throw CLI::ValidationError("construct", "unknown family: " + name);
}

int cmd_catalog_list(const std::string& lo, const std::string& hi,
                     std::optional<long long> max_n, std::optional<size_t> count,
                     bool as_csv, bool as_json) {
  md::EnumLimits limits;
  limits.max_n = max_n;
  limits.max_count = count;
  auto entries = md::enumerate_B(Rational::parse(lo), Rational::parse(hi), limits);
  if (as_csv) std::cout << md::csv_header() << "\n";
  for (const auto& e : entries) {
    if (as_csv)
      std::cout << md::entry_to_csv(e) << "\n";
    else if (as_json)
      std::cout << md::entry_to_json(e) << "\n";
    else
      std::cout << e.beta.str() << " " << md::kind_name(e.kind) << "\n";
  }
  return 0;
}

int cmd_catalog_member(const std::string& q, bool as_json) {
  md::MembershipResult r = md::membership(Rational::parse(q));
  using Status = md::MembershipResult::Status;
  if (as_json) {
    nlohmann::json j;
    j["query"] = q;
    j["status"] = r.status == Status::InB      ? "in_B"
                  : r.status == Status::NotInB ? "not_in_B"
                                               : "unknown_above_2";
    if (r.entry) j["entry"] = nlohmann::json::parse(md::entry_to_json(*r.entry));
    if (r.known_hit) {
      j["known_hit"] = {{"beta", r.known_hit->beta.str()},
                        {"note", r.known_hit->note},
                        {"conjectured_least_in_B", r.known_hit->conjectured_least_in_B},
                        {"conjectured_least_in_B2", r.known_hit->conjectured_least_in_B2}};
      if (r.known_hit->witness)
        j["known_hit"]["witness"] = md::emit_graph6(md::build(*r.known_hit->witness));
    }
    std::cout << j.dump() << "\n";
  } else if (r.status == Status::InB) {
    std::cout << "in B: " << md::entry_to_json(*r.entry) << "\n";
  } else if (r.status == Status::NotInB) {
    std::cout << "not in B\n";
  } else {
    std::cout << "above 2: not characterized";
    if (r.known_hit) std::cout << "; known member (" << r.known_hit->note << ")";
    std::cout << "\n";
  }
  return r.status == Status::InB ? 0 : 1;
}

int cmd_catalog_gap(const std::string& x) {
  Rational q = Rational::parse(x);
  md::CatalogEntry next = md::next_above(q);
  std::cout << "next " << next.beta.str() << " gap " << (next.beta - q).str() << "\n";
  return 0;
}

int cmd_catalog_witness(const std::string& beta) {
  md::MembershipResult r = md::membership(Rational::parse(beta));
  if (r.status != md::MembershipResult::Status::InB) {
    std::cerr << "witness: " << beta << " is not a characterized member\n";
    return 1;
  }
  std::cout << md::emit_graph6(md::witness(*r.entry)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact critical densities of minor-closed graph classes"};
  app.require_subcommand(1);

  GlobalOpts global;
  if (const char* env = std::getenv("MD_BUDGET")) global.budget = std::stoull(env);
  if (const char* env = std::getenv("MD_JOBS")) global.jobs = std::stoi(env);
  app.add_option("--budget", global.budget, "search node budget");
  app.add_option("--jobs", global.jobs, "worker threads for scans");
  app.add_flag("--json", global.json, "machine-readable output");

  std::string graph_arg, h_arg, g_arg;
  std::optional<int> t_opt;
  bool strict = false;

  auto* density_cmd = app.add_subcommand("density", "rho of each input graph");
  density_cmd->add_option("graph", graph_arg, "graph6 or - for stdin")->required();

  int t_value = 0;
  auto* tdensity_cmd = app.add_subcommand("tdensity", "rho_t of each input graph");
  tdensity_cmd->add_option("-t", t_value, "t parameter")->required();
  tdensity_cmd->add_option("graph", graph_arg, "graph6 or - for stdin")->required();

  auto* balanced_cmd = app.add_subcommand("balanced", "minor-balancedness check");
  balanced_cmd->add_flag("--strict", strict, "require proper minors strictly sparser");
  int balanced_t = -1;
  balanced_cmd->add_option("-t", balanced_t, "use rho_t instead of rho");
  balanced_cmd->add_option("graph", graph_arg, "graph6 or - for stdin")->required();

  auto* plant_cmd = app.add_subcommand("plant", "2-plant recognition");
  int cover_k = -1;
  plant_cmd->add_option("--cover", cover_k, "per-edge plant cover with this k");
  plant_cmd->add_option("graph", graph_arg, "graph6 or - for stdin")->required();

  auto* construct_cmd = app.add_subcommand("construct", "emit a family graph as graph6");
  std::string family;
  long long fk = 0, fm = 0, ft = 0, fa = 0, fh = 0;
  bool closed_only = false;
  construct_cmd
      ->add_option("family", family,
                   "gkm|fkm|star-of-plants|k-plus-2a|fan-cliques|bowtie-star|"
                   "clique-star|path|witness-25-11")
      ->required();
  construct_cmd->add_option("-k", fk, "k parameter");
  construct_cmd->add_option("-m", fm, "m parameter");
  construct_cmd->add_option("-t", ft, "t parameter");
  construct_cmd->add_option("-a", fa, "a parameter");
  construct_cmd->add_option("-H", fh, "h parameter");
  construct_cmd->add_flag("--closed-form", closed_only, "print v, e, rho instead");

  auto* catalog_cmd = app.add_subcommand("catalog", "catalog of critical densities");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "members in [lo, hi)");
  std::string lo_str, hi_str;
  long long list_max_n = -1;
  long long list_count = -1;
  bool list_csv = false;
  list_cmd->add_option("lo", lo_str)->required();
  list_cmd->add_option("hi", hi_str)->required();
  list_cmd->add_option("--max-n", list_max_n, "largest witness order to include");
  list_cmd->add_option("--count", list_count, "stop after this many values");
  list_cmd->add_flag("--csv", list_csv, "CSV output");
  auto* member_cmd = catalog_cmd->add_subcommand("member", "membership of a value");
  std::string member_q;
  member_cmd->add_option("value", member_q, "rational p/q")->required();
  auto* gap_cmd = catalog_cmd->add_subcommand("gap", "least member above x and the gap");
  std::string gap_x;
  gap_cmd->add_option("value", gap_x, "rational p/q")->required();
  auto* witness_cmd = catalog_cmd->add_subcommand("witness", "witness graph for a member");
  std::string witness_beta;
  witness_cmd->add_option("value", witness_beta, "rational p/q")->required();

  auto* minor_cmd = app.add_subcommand("minor", "minor containment and search");
  minor_cmd->require_subcommand(1);
  auto* mt_cmd = minor_cmd->add_subcommand("test", "is H a minor of G");
  mt_cmd->add_option("H", h_arg, "pattern graph6")->required();
  mt_cmd->add_option("G", g_arg, "host graph6 or - for stdin")->required();
  auto* md_cmd = minor_cmd->add_subcommand("densest", "densest minor");
  md_cmd->add_option("graph", graph_arg, "graph6 or - for stdin")->required();

  auto* scan_cmd = app.add_subcommand("scan", "classify all classes up to max-n");
  int scan_max_n = 5;
  bool scan_strict = false, scan_connected = false, scan_stdin = false;
  int scan_t = -1;
  scan_cmd->add_option("--max-n", scan_max_n, "largest order")->required();
  scan_cmd->add_flag("--strict", scan_strict);
  scan_cmd->add_option("-t", scan_t, "use rho_t");
  scan_cmd->add_flag("--connected", scan_connected, "connected classes only");
  scan_cmd->add_flag("--stdin", scan_stdin, "read graph6 stream instead of enumerating");

  auto* cross_cmd = app.add_subcommand("crosscheck", "catalog vs exhaustive scan");
  int cross_max_n = 6;
  cross_cmd->add_option("--max-n", cross_max_n, "largest order")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  bool verify_deep = false;
  verify_cmd->add_flag("--deep", verify_deep, "include the long strict-balance checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (density_cmd->parsed()) return cmd_density(graph_arg, std::nullopt);
    if (tdensity_cmd->parsed()) return cmd_density(graph_arg, t_value);
    if (balanced_cmd->parsed()) {
      if (balanced_t >= 0) t_opt = balanced_t;
      return cmd_balanced(graph_arg, strict, t_opt, global);
    }
    if (plant_cmd->parsed())
      return cmd_plant(graph_arg, cover_k >= 0 ? std::optional<int>(cover_k) : std::nullopt);
    if (construct_cmd->parsed()) {
      md::FamilySpec spec = family_from_cli(family, fk, fm, ft, fa, fh);
      if (closed_only) {
        md::ClosedForm cf = md::closed_form(spec);
        std::cout << "v " << cf.v << " e " << cf.e << " rho " << cf.rho.str();
        if (cf.rho1) std::cout << " rho1 " << cf.rho1->str();
        std::cout << "\n";
      } else {
        std::cout << md::emit_graph6(md::build(spec)) << "\n";
      }
      return 0;
    }
    if (list_cmd->parsed())
      return cmd_catalog_list(lo_str, hi_str,
                              list_max_n >= 0 ? std::optional<long long>(list_max_n)
                                              : std::nullopt,
                              list_count >= 0 ? std::optional<size_t>(list_count)
                                              : std::nullopt,
                              list_csv, global.json);
    if (member_cmd->parsed()) return cmd_catalog_member(member_q, global.json);
    if (gap_cmd->parsed()) return cmd_catalog_gap(gap_x);
    if (witness_cmd->parsed()) return cmd_catalog_witness(witness_beta);
    if (mt_cmd->parsed()) return cmd_minor_test(h_arg, g_arg, global);
    if (md_cmd->parsed()) return cmd_minor_densest(graph_arg, global);
    if (scan_cmd->parsed()) {
      md::BalanceQuery query;
      if (scan_t >= 0) {
        query.mode = scan_strict ? BalanceMode::StrictlyTMinorBalanced
                                 : BalanceMode::TMinorBalanced;
        query.t = scan_t;
      } else {
        query.mode = scan_strict ? BalanceMode::StrictlyMinorBalanced
                                 : BalanceMode::MinorBalanced;
      }
      md::ScanOptions opts;
      opts.jobs = global.jobs;
      opts.search = search_options(global);
      opts.connected_only = scan_connected;
      if (scan_stdin) opts.source = &std::cin;
      md::ScanReport report = md::scan_balanced(scan_max_n, query, opts);
      std::cout << md::scan_report_json(report);
      md::print_scan_summary(report, std::cerr);
      return report.partial() ? 3 : 0;
    }
    if (cross_cmd->parsed()) {
      md::ScanOptions opts;
      opts.jobs = global.jobs;
      opts.search = search_options(global);
      md::CrosscheckReport report = md::crosscheck(cross_max_n, opts);
      std::cout << md::crosscheck_report_json(report);
      md::print_crosscheck_summary(report, std::cerr);
      return report.pass() ? 0 : (report.partial ? 3 : 1);
    }
    if (verify_cmd->parsed()) {
      md::VerifyOptions opts;
      opts.deep = verify_deep;
      opts.jobs = global.jobs;
      auto results = md::run_acceptance(opts, std::cout);
      return md::all_passed(results) ? 0 : 1;
    }
  } catch (const md::BudgetExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
