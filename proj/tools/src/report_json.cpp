#include "report_json.hpp"

#include <algorithm>
#include <sstream>

namespace pascalpell::cli {

std::string schema_id(const std::string& kind) { return "pascalpell." + kind + "/1"; }

Json pair_json(const IntPair& p) { return Json::array({to_string(p.first), to_string(p.second)}); }

Json solution_json(const Solution& s) {
  return Json{{"n", to_string(s.n)}, {"m", s.m.to_string()}, {"m_quarters", to_string(s.m.quarters())}};
}

Json search_json(const SearchReport& r, bool with_timing) {
  Json out;
  out["schema"] = schema_id("search");
  out["family"] = r.family.name();
  out["k"] = r.family.k();
  out["quartile"] = to_string(r.family.quartile());
  out["N"] = to_string(r.N);
  out["domain"] = to_string(r.domain);
  out["solutions"] = Json::array();
  for (const auto& s : r.solutions) out["solutions"].push_back(solution_json(s));
  out["trivial"] = Json::array();
  for (const auto& s : r.trivial_excluded) out["trivial"].push_back(solution_json(s));
  out["tested"] = r.tested;
  out["pruned"] = r.pruned;
  out["audited"] = r.audited;
  out["sieve_moduli"] = r.sieve_moduli;
  out["arithmetic"] = r.arithmetic;
  if (with_timing) out["seconds"] = r.seconds;
  return out;
}

Json unit_json(const Integer& D) {
  const SqrtCF cf = sqrt_cf(D);
  const PellFundamental fu = fundamental_unit(D);
  Json out;
  out["schema"] = schema_id("pell-unit");
  out["D"] = to_string(D);
  out["a0"] = to_string(cf.a0);
  out["period"] = Json::array();
  for (const auto& a : cf.period) out["period"].push_back(to_string(a));
  out["unit"] = pair_json(fu.unit);
  out["negative"] = fu.negative ? pair_json(*fu.negative) : Json(nullptr);
  return out;
}

Json classes_json(const PellProblem& p, const std::vector<PellClassSeq>& classes) {
  Json out;
  out["schema"] = schema_id("pell-classes");
  out["D"] = to_string(p.D());
  out["c"] = to_string(p.c());
  if (p.y_condition())
    out["y_condition"] = {{"residue", to_string(p.y_condition()->residue)},
                          {"modulus", to_string(p.y_condition()->modulus)}};
  out["unit"] = pair_json(fundamental_unit(p.D()).unit);
  out["classes"] = Json::array();
  for (const auto& c : classes) out["classes"].push_back({{"seed", pair_json(c.seed)}});
  return out;
}

Json paper_sequences_json(const PaperSequenceReport& r) {
  Json out;
  out["schema"] = schema_id("pell-verify");
  out["total"] = r.tuples.size();
  out["matched"] = r.matched();
  out["tuples"] = Json::array();
  for (const auto& t : r.tuples)
    out["tuples"].push_back(
        {{"sequence", t.sequence}, {"index", t.index}, {"printed", t.printed}, {"computed", t.computed}, {"match", t.match}});
  return out;
}

Json expansion_json(const CFExpansion& e) {
  Json out;
  out["schema"] = schema_id("cf-expand");
  out["constant"] = e.constant.label();
  out["quotients"] = Json::array();
  for (const auto& a : e.quotients) out["quotients"].push_back(to_string(a));
  out["precision_bits"] = e.precision_bits;
  return out;
}

Json convergents_json(const CFExpansion& e) {
  Json out;
  out["schema"] = schema_id("cf-convergents");
  out["constant"] = e.constant.label();
  out["convergents"] = Json::array();
  for (const auto& c : convergents(e))
    out["convergents"].push_back({{"index", c.index},
                                  {"p", to_string(c.p)},
                                  {"q", to_string(c.q)},
                                  {"diophantine", is_diophantine(e.constant, c.p, c.q)}});
  return out;
}

Json a1_json(const std::vector<A1Row>& rows) {
  Json out;
  out["schema"] = schema_id("cf-a1-table");
  out["rows"] = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["constant"] = row.constant;
    r["paper_blank"] = row.paper_blank;
    r["printed_total"] = row.printed_total;
    r["printed_matched"] = row.printed_matched;
    r["entries"] = Json::array();
    for (const auto& e : row.entries)
      r["entries"].push_back({{"index", e.index},
                              {"p", to_string(e.p)},
                              {"q", to_string(e.q)},
                              {"diophantine", e.diophantine},
                              {"matches_paper", e.matches_paper}});
    r["discrepancies"] = Json::array();
    for (const auto& d : row.discrepancies)
      r["discrepancies"].push_back({{"position", d.position},
                                    {"printed", to_string(d.printed)},
                                    {"printed_diophantine", d.printed_diophantine},
                                    {"computed", d.computed ? Json(to_string(*d.computed)) : Json(nullptr)}});
    out["rows"].push_back(std::move(r));
  }
  return out;
}

Json table_json(const std::string& curve, const ResidueTable& t, bool with_pairs) {
  Json out;
  out["schema"] = schema_id("sieve-table");
  out["curve"] = curve;
  out["polynomial"] = t.curve().to_string();
  out["variables"] = {std::string(1, var_name(t.first())), std::string(1, var_name(t.second()))};
  out["modulus"] = t.modulus();
  out["admissible_count"] = t.admissible_count();
  out["fraction"] = to_string(t.fraction());
  out["prune_fraction"] = to_string(prune_fraction(t));
  if (with_pairs) {
    out["pairs"] = Json::array();
    for (auto [a, b] : t.pairs()) out["pairs"].push_back({a, b});
  }
  return out;
}

Json prune_json(const std::string& curve, const std::vector<ResidueTable>& tables) {
  Json out;
  out["schema"] = schema_id("sieve-prune");
  out["curve"] = curve;
  out["tables"] = Json::array();
  for (const auto& t : tables)
    out["tables"].push_back({{"modulus", t.modulus()},
                             {"admissible_count", t.admissible_count()},
                             {"fraction", to_string(t.fraction())},
                             {"prune_fraction", to_string(prune_fraction(t))},
                             {"prune_decimal", prune_fraction(t).get_d()}});
  return out;
}

Json prove_empty_json(const std::string& curve, const Polynomial& p, const std::vector<std::uint32_t>& moduli) {
  Json out;
  out["schema"] = schema_id("sieve-prove-empty");
  out["curve"] = curve;
  out["polynomial"] = p.to_string();
  out["moduli"] = moduli;
  const auto cert = prove_empty(p, moduli);
  out["certificate"] = cert ? Json(*cert) : Json(nullptr);
  out["certifying_moduli"] = certifying_moduli(p, moduli);
  return out;
}

Json quasi_json(const EquationFamily& f, const QuasiSpec& spec, const std::vector<QuasiSolution>& rows) {
  Json out;
  out["schema"] = schema_id("quasi");
  out["family"] = f.name();
  out["constant"] = spec.constant.label();
  out["domain"] = to_string(spec.domain);
  out["rows"] = Json::array();
  Rational bound = 0;
  for (const auto& s : rows) {
    bound = std::max(bound, s.order_ratio);
    out["rows"].push_back({{"index", s.index},
                           {"p", to_string(s.p)},
                           {"q", to_string(s.q)},
                           {"n", to_string(s.n)},
                           {"m", s.m.to_string()},
                           {"m_offset", to_string(s.m_offset)},
                           {"residual", to_string(s.residual)},
                           {"order_ratio", to_string(s.order_ratio)}});
  }
  out["order_ratio_bound"] = to_string(bound);
  out["order_ratio_bound_decimal"] = bound.get_d();
  return out;
}

std::string quasi_csv(const std::vector<QuasiSolution>& rows) {
  std::ostringstream out;
  out << "index,p,q,n,m,n_plus_1,m_plus_1,m_offset,residual,order_ratio\n";
  for (const auto& s : rows) {
    Rational m1 = s.m.value() + 1;
    m1.canonicalize();
    out << s.index << ',' << to_string(s.p) << ',' << to_string(s.q) << ',' << to_string(s.n) << ','
        << s.m.to_string() << ',' << to_string(Integer(s.n + 1)) << ',' << to_string(m1) << ','
        << to_string(s.m_offset) << ',' << to_string(s.residual) << ',' << to_string(s.order_ratio) << '\n';
  }
  return out.str();
}

Json identity_json(const IdentityCheck& c) {
  return Json{{"name", c.name},
              {"statement", c.statement},
              {"against", c.against},
              {"substitution", c.substitution},
              {"equal", c.equal},
              {"factor", to_string(c.factor)},
              {"difference", c.difference.to_string()},
              {"verified_alternatives", c.verified_alternatives},
              {"note", c.note}};
}

Json identities_json(const std::vector<IdentityCheck>& checks) {
  Json out;
  out["schema"] = schema_id("identities");
  out["total"] = checks.size();
  out["verified"] = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.equal; });
  out["checks"] = Json::array();
  out["errata"] = Json::array();
  for (const auto& c : checks) {
    out["checks"].push_back(identity_json(c));
    if (!c.equal) out["errata"].push_back(c.name);
  }
  return out;
}

Json curves_json() {
  Json out;
  out["schema"] = schema_id("curves");
  out["curves"] = Json::array();
  for (const auto& c : curve_table()) {
    const bool ok = is_verified(c);
    out["curves"].push_back({{"family", c.family.name()},
                             {"label", c.label},
                             {"polynomial", c.polynomial.to_string()},
                             {"printed_polynomial", c.printed_polynomial.to_string()},
                             {"substitution", ok ? Json(c.substitution.to_string()) : Json(nullptr)},
                             {"printed_substitution", c.printed_substitution.to_string()},
                             {"scale", ok ? Json(to_string(c.scale)) : Json(nullptr)},
                             {"verified_by", c.verified_by},
                             {"constant", c.constant}});
  }
  return out;
}

}  // namespace pascalpell::cli
