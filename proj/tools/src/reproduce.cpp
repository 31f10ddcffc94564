#include "reproduce.hpp"

#include <algorithm>
#include <optional>

#include "pascalpell/fixtures.hpp"

namespace pascalpell::cli {

namespace {

struct SearchPlan {
  const char* family;
  long bound;
};

// The scales of the reproduction claims; the remaining families get a short scan.
constexpr SearchPlan kPlans[] = {{"C2", 12'000'000}, {"C2-Q3", 3'000'000}, {"C3", 1'000'000},
                                 {"C4", 1'000'000},  {"C5", 1'000'000},    {"C6", 1'000'000}};
constexpr long kShortBound = 10'000;

Json search_section(const ReproduceOptions& options) {
  std::vector<std::pair<EquationFamily, long>> plan;
  for (const auto& p : kPlans) plan.emplace_back(EquationFamily::parse(p.family), p.bound);
  for (const auto& f : EquationFamily::all())
    if (std::none_of(plan.begin(), plan.end(), [&](const auto& e) { return e.first == f; }))
      plan.emplace_back(f, kShortBound);

  SearchOptions so;
  so.workers = options.workers;
  Json out = Json::array();
  for (const auto& [f, bound] : plan) {
    const SearchReport r = exhaustive(f, Integer(bound), MedianDomain::quarters, default_sieves(f), so);
    Json j = search_json(r, false);
    j.erase("schema");
    j["solution_count"] = r.solutions.size();
    if (r.solutions.size() > options.listing_limit) {
      Json head = Json::array();
      for (std::size_t i = 0; i < 10; ++i) head.push_back(j["solutions"][i]);
      j["solutions"] = std::move(head);
      j["solutions_truncated"] = true;
    }
    out.push_back(std::move(j));
  }
  return out;
}

Json hit_json(const QuadratureHit& h) {
  return Json{{"alpha", h.alpha}, {"u", to_string(h.u)}, {"second", to_string(h.second)}};
}

Json quadrature_section() {
  const PaperFixtures& fx = paper_fixtures();
  Integer max_u = 1;
  for (int i = 0; i < 16; ++i) max_u *= 10;

  Json c4;
  c4["max_u"] = to_string(max_u);
  c4["hits"] = Json::array();
  c4["unexpected"] = Json::array();
  auto record = [&](const std::string& seq, const QuadratureHit& h) {
    Json j = hit_json(h);
    j["sequence"] = seq;
    c4["hits"].push_back(j);
    const std::pair<Integer, Integer> uj{h.u, h.second};
    if (std::find(fx.quadrature_excluded.begin(), fx.quadrature_excluded.end(), uj) == fx.quadrature_excluded.end())
      c4["unexpected"].push_back(j);
  };
  // The two small solutions lead every printed list; orbit terms proper start at alpha 1.
  for (const auto& h : quadrature_scan(small_solution_orbit(), QuadratureSide::c4_u_plus_5_and_j, Integer(20)))
    record("small", h);
  const auto orbits = prop32_orbits();
  for (std::size_t s = 0; s < orbits.size(); ++s)
    for (const auto& h : quadrature_scan(orbits[s], QuadratureSide::c4_u_plus_5_and_j, max_u, 1))
      record(fx.prop32_orbits[s].name, h);

  constexpr std::uint64_t kCubicBound = 1'000'000;
  Json c6;
  c6["bound"] = kCubicBound;
  c6["integer_points"] = Json::array();
  for (const auto& p : eq317_integer_points(kCubicBound)) c6["integer_points"].push_back(pair_json(p));
  c6["square_points"] = Json::array();
  for (const auto& p : eq317_square_points(kCubicBound)) c6["square_points"].push_back(pair_json(p));
  // The printed hits are the points with n, m >= 1; (25, 16) is the trivial (0, 0).
  c6["recovered"] = Json::array();
  Json positive = Json::array();
  for (const auto& r : eq317_recovered(kCubicBound)) {
    Json j{{"u", to_string(r.u)}, {"v", to_string(r.v)}, {"n", to_string(r.n)}, {"m", to_string(r.m)}};
    c6["recovered"].push_back(j);
    if (r.n >= 1 && r.m >= 1) positive.push_back(pair_json({r.u, r.v}));
  }
  c6["positive"] = positive;
  Json printed = Json::array();
  for (const auto& p : fx.eq317_hits) printed.push_back(pair_json(p));
  c6["matches_paper"] = positive == printed;
  return Json{{"u_plus_5_and_j", c4}, {"cubic_squares", c6}};
}

Json sieve_section() {
  Json out;
  const std::vector<std::uint32_t> moduli{3, 4, 5, 7, 8};
  out["eq314"] = prove_empty_json("eq314", eq314_curve(), moduli);
  out["eq314"].erase("schema");
  out["eq314_mod8_alone"] = prove_empty(eq314_curve(), {8}) == std::optional<std::uint32_t>(8);
  Json tables = Json::array();
  for (auto [name, p] : {std::pair{"C3", 3U}, {"C5", 5U}, {"C4", 5U}, {"C6", 7U}}) {
    const CurveEntry& c = curve(EquationFamily::parse(name));
    const ResidueTable t(c.polynomial, p, Var::x, Var::y);
    Json j = table_json(c.label, t, false);
    j.erase("schema");
    j["family"] = name;
    tables.push_back(std::move(j));
  }
  out["tables"] = std::move(tables);
  Json defaults = Json::array();
  for (const auto& f : EquationFamily::all()) {
    Json mods = Json::array();
    for (const auto& s : default_sieves(f)) mods.push_back(s.table.modulus());
    defaults.push_back({{"family", f.name()}, {"moduli", mods}});
  }
  out["default_sieves"] = std::move(defaults);
  return out;
}

Json printed_list_check(const EquationFamily& f, const QuasiSpec& spec, const QuasiListFixture& printed) {
  constexpr std::size_t kLookahead = 40;
  const auto rows = quasi_generate(f, spec, kLookahead);
  Json out;
  out["constant"] = printed.constant;
  out["entries"] = Json::array();
  std::size_t matched = 0;
  for (std::size_t i = 0; i < printed.m_plus_1.size(); ++i) {
    const Rational& m1 = printed.m_plus_1[i];
    const Rational& n1 = printed.n_plus_1[i];
    const auto hit = std::find_if(rows.begin(), rows.end(), [&](const QuasiSolution& s) {
      return Rational(s.n + 1) == n1 && s.m.value() + 1 == m1;
    });
    Json e{{"m_plus_1", to_string(m1)}, {"n_plus_1", to_string(n1)}, {"regenerated", hit != rows.end()}};
    if (hit != rows.end()) {
      ++matched;
      e["convergent_index"] = hit->index;
      e["residual"] = to_string(hit->residual);
    }
    out["entries"].push_back(std::move(e));
  }
  out["matched"] = matched;
  out["total"] = printed.m_plus_1.size();
  return out;
}

Json quasi_section() {
  constexpr std::size_t kCount = 15;
  Json families = Json::array();
  for (const auto& f : EquationFamily::all()) {
    std::optional<QuasiSpec> spec;
    try {
      spec = default_quasi_spec(f);
    } catch (const NoCurveError&) {
      continue;
    }
    Json j = quasi_json(f, *spec, quasi_generate(f, *spec, kCount));
    j.erase("schema");
    families.push_back(std::move(j));
  }
  const PaperFixtures& fx = paper_fixtures();
  const EquationFamily c3(3, Quartile::median);
  return Json{{"families", families},
              {"printed_integer_list", printed_list_check(c3, c3_integer_list_spec(), fx.c3_quasi_integer)},
              {"printed_half_list", printed_list_check(c3, c3_half_list_spec(), fx.c3_quasi_half)}};
}

}  // namespace

Json reproduce(const ReproduceOptions& options) {
  Json out;
  out["schema"] = schema_id("reproduce");
  out["fixtures_version"] = paper_fixtures().version;

  const PaperSequenceReport seq = verify_paper_sequences();
  out["sequences"] = paper_sequences_json(seq);
  out["sequences"].erase("schema");

  out["searches"] = search_section(options);
  out["quadrature"] = quadrature_section();
  out["sieves"] = sieve_section();

  const auto checks = identity_suite();
  out["identities"] = identities_json(checks);
  out["identities"].erase("schema");
  out["curves"] = curves_json()["curves"];

  const auto a1 = a1_table();
  out["a1_table"] = a1_json(a1)["rows"];
  out["quasi"] = quasi_section();

  Json summary;
  summary["sequence_tuples"] = seq.tuples.size();
  summary["sequence_mismatches"] = seq.mismatched();
  summary["identity_errata"] = out["identities"]["errata"];
  std::size_t a1_flags = 0;
  for (const auto& row : a1) a1_flags += row.discrepancies.size();
  summary["a1_discrepancies"] = a1_flags;
  summary["quadrature_unexpected"] = out["quadrature"]["u_plus_5_and_j"]["unexpected"].size();
  summary["cubic_squares_match"] = out["quadrature"]["cubic_squares"]["matches_paper"];
  out["summary"] = std::move(summary);
  return out;
}

}  // namespace pascalpell::cli
