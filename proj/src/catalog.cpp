#include "catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace md {

namespace {

Rational interior_beta(int k, long long n, int t) {
  // 2 - 1/k - (2k - t - 1) / (kn)
  return Rational(2) - Rational(1, k) - Rational(2LL * k - t - 1) / Rational::make((long long)k * n, 1);
}

bool interior_valid(int k, long long n, int t, long long& m_out) {
  if (t < 0 || t >= k) return false;
  long long rem = n - 1 - t;
  if (rem <= 0 || rem % k != 0) return false;
  long long m = rem / k;
  if (m < 1) return false;
  if (n <= (long long)(2 * k - 1 - t) * (k - 1)) return false;
  m_out = m;
  return true;
}

CatalogEntry make_sub_one(long long t) {
  CatalogEntry e;
  e.beta = Rational::make(t - 1, t);
  e.kind = EntryKind::SubOne;
  e.t = int(t);
  e.witness_spec = FamilySpec::path(t);
  return e;
}

CatalogEntry make_endpoint(int k) {
  CatalogEntry e;
  e.beta = Rational(2) - Rational(1, k - 1);
  e.kind = EntryKind::IntervalEndpoint;
  e.k = k;
  e.witness_spec = FamilySpec::k_plus_2a(3LL * k - 5);  // C_3 when k = 2
  return e;
}

CatalogEntry make_two() {
  CatalogEntry e;
  e.beta = Rational(2);
  e.kind = EntryKind::Two;
  e.witness_spec = FamilySpec::clique_star(6, 1, 1);  // K_5
  return e;
}

CatalogEntry make_interior(int k, const std::vector<Parametrization>& params) {
  CatalogEntry e;
  const Parametrization& least = params.front();  // lexicographically smallest
  e.beta = interior_beta(least.k, least.n, least.t);
  e.kind = EntryKind::Interior;
  e.k = least.k;
  e.n = least.n;
  e.t = least.t;
  e.m = least.m;
  e.parametrizations = params;
  e.witness_spec = FamilySpec::star_of_plants(least.k, least.m, least.t);
  (void)k;
  return e;
}

// Interval index k >= 2 with x < 2 - 1/k, smallest such k (so for x >= 1,
// x lies in [2 - 1/(k-1), 2 - 1/k)).
int interval_of(const Rational& x) {
  // smallest k with k > 1/(2-x)
  Rational inv = Rational(1) / (Rational(2) - x);
  long long k = (long long)inv.floor() + 1;
  return int(std::max(k, 2LL));
}

// Least interior value with parameter k strictly above x, per remainder t.
std::vector<Parametrization> interior_above(int k, const Rational& x,
                                            std::optional<long long> max_n) {
  std::vector<Parametrization> found;
  Rational d = Rational(2) - Rational(1, k) - x;  // required (2k-t-1)/(kn) < d
  if (d.sign() <= 0) return found;
  Rational best;
  for (int t = 0; t < k; ++t) {
    // n > (2k-t-1)/(kd), n > (2k-1-t)(k-1), n = mk+1+t with m >= 1
    Rational lower = Rational(2LL * k - t - 1) / (Rational(k) * d);
    long long n = lower.floor() + 1;
    long long floor_bound = (long long)(2 * k - 1 - t) * (k - 1);
    n = std::max({n, floor_bound + 1, (long long)k + 1 + t});
    // round n up to the residue 1 + t mod k
    long long rem = ((n - 1 - t) % k + k) % k;
    if (rem != 0) n += k - rem;
    if (max_n && n > *max_n) continue;
    long long m = (n - 1 - t) / k;
    Rational beta = interior_beta(k, n, t);
    Parametrization p{k, n, t, (long long)m};
    if (found.empty() || beta < best) {
      best = beta;
      found = {p};
    } else if (beta == best) {
      found.push_back(p);
    }
  }
  std::sort(found.begin(), found.end(), [](const Parametrization& a, const Parametrization& b) {
    return std::tie(a.k, a.n, a.t, a.m) < std::tie(b.k, b.n, b.t, b.m);
  });
  return found;
}

// All parametrizations of an exact interior value (k fixed by the interval).
std::vector<Parametrization> interior_solutions(int k, const Rational& q) {
  std::vector<Parametrization> out;
  Rational d = Rational(2) - Rational(1, k) - q;
  if (d.sign() <= 0) return out;
  for (int t = 0; t < k; ++t) {
    // solve (2k-t-1)/(kn) = d for integral n
    Rational n_exact = Rational(2LL * k - t - 1) / (Rational(k) * d);
    if (!n_exact.is_integer()) continue;
    long long n = (long long)n_exact.num();
    long long m;
    if (interior_valid(k, n, t, m)) out.push_back({k, n, t, m});
  }
  std::sort(out.begin(), out.end(), [](const Parametrization& a, const Parametrization& b) {
    return std::tie(a.k, a.n, a.t, a.m) < std::tie(b.k, b.n, b.t, b.m);
  });
  return out;
}

}  // namespace

std::string kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::SubOne: return "sub_one";
    case EntryKind::IntervalEndpoint: return "interval_endpoint";
    case EntryKind::Interior: return "interior";
    case EntryKind::Two: return "two";
  }
  return "?";
}

// max_n filters by witness size: paths have t vertices, interior stars n,
// interval endpoints 3k-3.
std::optional<CatalogEntry> next_above_limited(const Rational& x,
                                               std::optional<long long> max_n) {
  if (x.sign() < 0 || x >= Rational(2))
    throw std::invalid_argument("next_above: x must be in [0, 2)");
  if (x < Rational(1)) {
    // least (t-1)/t above x; these accumulate at 1 from below
    Rational inv = Rational(1) / (Rational(1) - x);
    long long t = (long long)inv.floor() + 1;
    if (!max_n || t <= *max_n) return make_sub_one(t);
    // rest of the sub-one tail is filtered out; continue at beta = 1
    if (!max_n || 3 <= *max_n) return make_endpoint(2);
    return next_above_limited(Rational(1), max_n);
  }
  int k = interval_of(x);  // x sits in [2 - 1/(k-1), 2 - 1/k)
  std::vector<Parametrization> interior = interior_above(k, x, max_n);
  if (!interior.empty()) {
    Rational beta = interior_beta(interior[0].k, interior[0].n, interior[0].t);
    // collect every parametrization of the value, not just the minimal n per t
    return make_interior(k, interior_solutions(k, beta));
  }
  if (!max_n || 3LL * (k + 1) - 3 <= *max_n) return make_endpoint(k + 1);
  // this interval is exhausted under the filter; larger intervals only have
  // larger witnesses, so stop once none can fit
  if ((long long)k * (k + 1) + 1 > *max_n) return std::nullopt;
  return next_above_limited(Rational(2) - Rational(1, k), max_n);
}

CatalogEntry next_above(const Rational& x) {
  auto e = next_above_limited(x, std::nullopt);
  if (e) return *e;
  return make_two();
}

Rational gap(const Rational& x) { return next_above(x).beta - x; }

MembershipResult membership(const Rational& q) {
  if (q.sign() < 0) throw std::invalid_argument("membership: value must be >= 0");
  MembershipResult result;
  if (q > Rational(2)) {
    result.status = MembershipResult::Status::UnknownAbove2;
    // documented members above 2
    if (q == Rational(25, 11)) {
      KnownAbove2 hit;
      hit.beta = q;
      hit.witness = FamilySpec::witness_25_11();
      hit.note = "1-density of the fan-clique family; achieved by the apexed chorded 10-cycle";
      result.known_hit = hit;
      return result;
    }
    if (q == Rational(11, 5)) {
      KnownAbove2 hit;
      hit.beta = q;
      hit.note = "limit of the bowtie-star densities; conjectured least value above 2 "
                 "for classes with 2-connected excluded minors";
      hit.conjectured_least_in_B2 = true;
      result.known_hit = hit;
      return result;
    }
    // 2 + (k-2)/(5k+1) for integer k >= 1
    Rational r = q - Rational(2);
    Rational denom = Rational(1) - Rational(5) * r;
    if (denom.sign() > 0) {
      Rational k_exact = (Rational(2) + r) / denom;
      if (k_exact.is_integer() && k_exact >= Rational(1)) {
        KnownAbove2 hit;
        hit.beta = q;
        long long k = (long long)k_exact.num();
        hit.witness = FamilySpec::bowtie_star(k);
        hit.note = "bowtie-star density, k = " + std::to_string(k);
        hit.conjectured_least_in_B = (k == 3);  // 33/16
        result.known_hit = hit;
      }
    }
    return result;
  }
  if (q == Rational(2)) {
    result.status = MembershipResult::Status::InB;
    result.entry = make_two();
    return result;
  }
  if (q < Rational(1)) {
    // (t-1)/t means t = 1/(1-q) must be a positive integer
    Rational t_exact = Rational(1) / (Rational(1) - q);
    if (t_exact.is_integer()) {
      result.status = MembershipResult::Status::InB;
      result.entry = make_sub_one((long long)t_exact.num());
    } else {
      result.status = MembershipResult::Status::NotInB;
    }
    return result;
  }
  int k = interval_of(q);
  if (q == Rational(2) - Rational(1, k - 1)) {
    result.status = MembershipResult::Status::InB;
    result.entry = make_endpoint(k);
    return result;
  }
  std::vector<Parametrization> params = interior_solutions(k, q);
  if (params.empty()) {
    result.status = MembershipResult::Status::NotInB;
  } else {
    result.status = MembershipResult::Status::InB;
    result.entry = make_interior(k, params);
  }
  return result;
}

std::vector<CatalogEntry> enumerate_B(const Rational& lo, const Rational& hi,
                                      const EnumLimits& limits) {
  if (lo.sign() < 0) throw std::invalid_argument("enumerate_B: lo must be >= 0");
  if (hi >= Rational(2)) throw std::invalid_argument("enumerate_B: hi must be < 2");
  if (!(lo < hi)) throw std::invalid_argument("enumerate_B: need lo < hi");
  std::vector<CatalogEntry> out;
  size_t cap = limits.max_count.value_or(SIZE_MAX);
  constexpr size_t kHardCap = 2'000'000;  // refuse silently unbounded walks

  auto admit = [&](const CatalogEntry& e) {
    if (!limits.max_n) return true;
    switch (e.kind) {
      case EntryKind::SubOne: return (long long)e.t <= *limits.max_n;
      case EntryKind::Interior: return e.n <= *limits.max_n;
      case EntryKind::IntervalEndpoint: return 3LL * e.k - 3 <= *limits.max_n;
      case EntryKind::Two: return 5 <= *limits.max_n;
    }
    return true;
  };

  // membership test at lo itself, then walk next_above
  MembershipResult at_lo = membership(lo);
  if (at_lo.status == MembershipResult::Status::InB && at_lo.entry->beta < hi &&
      admit(*at_lo.entry))
    out.push_back(*at_lo.entry);
  Rational x = lo;
  while (out.size() < cap) {
    auto e = next_above_limited(x, limits.max_n);
    if (!e || !(e->beta < hi)) break;
    if (admit(*e)) out.push_back(*e);
    if (out.size() > kHardCap)
      throw BudgetExceeded("enumerate_B: too many values; pass max_n or max_count");
    x = e->beta;
  }
  return out;
}

Graph witness(const CatalogEntry& entry) {
  Graph g = build(entry.witness_spec);
  if (!(density(g) == entry.beta))
    throw std::logic_error("witness: density does not match the entry");
  return g;
}

std::vector<Rational> slice_B2_upto2(int k_max) {
  if (k_max < 1) throw std::invalid_argument("slice: k_max must be >= 1");
  std::vector<Rational> out;
  for (int k = 1; k <= k_max; ++k) out.push_back(Rational(2) - Rational(1, k));
  out.push_back(Rational(2));
  return out;
}

std::vector<Rational> slice_Bprime_1_2(int k_max) { return slice_B2_upto2(k_max); }

std::vector<Rational> b3_least_values() { return {Rational(2), Rational(5, 2)}; }

Rational lower_bound_t_connected(int h, int t) {
  if (t + 1 < 2 || h < t + 1)
    throw std::invalid_argument("lower_bound_t_connected: need h >= t+1 >= 2");
  return Rational(h + t - 3, 2);
}

BtBounds min_Bt_bounds(int t) {
  if (t < 1) throw std::invalid_argument("min_Bt_bounds: t must be >= 1");
  BtBounds b;
  b.lo = Rational(t - 1);
  if (t <= 8) {
    b.hi = b.lo;
    b.exact = true;
  } else {
    b.hi = Rational(2 * t - 2);
    b.exact = false;
  }
  return b;
}

long long max_edges_path_forest(long long n, long long t) {
  if (n < 1 || t < 1) throw std::invalid_argument("max_edges_path_forest: need n, t >= 1");
  long long parts = (n + t - 1) / t;
  return n - parts;
}

namespace {

nlohmann::json entry_json_obj(const CatalogEntry& e) {
  nlohmann::json j;
  j["beta"] = e.beta.str();
  j["kind"] = kind_name(e.kind);
  j["k"] = e.kind == EntryKind::IntervalEndpoint || e.kind == EntryKind::Interior
               ? nlohmann::json(e.k)
               : nlohmann::json();
  j["n"] = e.kind == EntryKind::Interior ? nlohmann::json(e.n) : nlohmann::json();
  j["t"] = e.kind == EntryKind::SubOne || e.kind == EntryKind::Interior
               ? nlohmann::json(e.t)
               : nlohmann::json();
  j["m"] = e.kind == EntryKind::Interior ? nlohmann::json(e.m) : nlohmann::json();
  nlohmann::json params = nlohmann::json::array();
  for (const auto& p : e.parametrizations)
    params.push_back({{"k", p.k}, {"n", p.n}, {"t", p.t}, {"m", p.m}});
  j["parametrizations"] = params;
  ClosedForm cf = closed_form(e.witness_spec);
  if (cf.v <= kMaxVertices) {
    j["witness"] = emit_graph6(build(e.witness_spec));
  } else {
    j["witness"] = nlohmann::json();
  }
  return j;
}

}  // namespace

std::string entry_to_json(const CatalogEntry& e) { return entry_json_obj(e).dump(); }

std::string csv_header() { return "beta,kind,k,n,t,m,witness,parametrizations"; }

std::string entry_to_csv(const CatalogEntry& e) {
  auto field = [](bool present, long long v) {
    return present ? std::to_string(v) : std::string();
  };
  bool interior = e.kind == EntryKind::Interior;
  bool endpoint = e.kind == EntryKind::IntervalEndpoint;
  bool sub_one = e.kind == EntryKind::SubOne;
  std::string params;
  for (const auto& p : e.parametrizations) {
    if (!params.empty()) params += '|';
    params += std::to_string(p.k) + ":" + std::to_string(p.n) + ":" +
              std::to_string(p.t) + ":" + std::to_string(p.m);
  }
  ClosedForm cf = closed_form(e.witness_spec);
  std::string wit = cf.v <= kMaxVertices ? emit_graph6(build(e.witness_spec)) : "";
  return e.beta.str() + "," + kind_name(e.kind) + "," +
         field(endpoint || interior, e.k) + "," + field(interior, e.n) + "," +
         field(sub_one || interior, e.t) + "," + field(interior, e.m) + "," + wit +
         "," + params;
}

}  // namespace md
