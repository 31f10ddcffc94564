// Curve table and identity suite, both driven by the fixture data.

#include <algorithm>
#include <sstream>

#include "pascalpell/fixtures.hpp"
#include "pascalpell/pascal.hpp"

namespace pascalpell {

Substitution parse_substitution(const std::map<char, std::string>& text) {
  Substitution sub;
  for (const auto& [name, expr] : text) {
    const auto v = var_from_name(name);
    if (!v) throw std::invalid_argument(std::string("unknown substitution variable ") + name);
    sub.emplace(*v, Polynomial::parse(expr));
  }
  return sub;
}

AffineSub parse_affine_substitution(const std::map<char, std::string>& text) {
  std::vector<AffineMap> maps;
  for (const auto& [target, poly] : parse_substitution(text)) {
    const auto vars = poly.variables();
    if (vars.size() != 1 || poly.degree() != 1)
      throw std::invalid_argument(std::string("substitution for ") + var_name(target) + " is not affine in one variable");
    Monomial lin;
    lin.exps[static_cast<std::size_t>(vars.front())] = 1;
    maps.push_back({target, vars.front(), poly.coefficient(lin), poly.coefficient(Monomial{})});
  }
  return AffineSub(std::move(maps));
}

namespace {

std::string substitution_text(const std::map<char, std::string>& text) {
  std::string out;
  for (const auto& [name, expr] : text) {
    if (!out.empty()) out += ", ";
    out += name;
    out += "=";
    out += expr;
  }
  return out;
}

bool is_plane_xy(const Polynomial& p) {
  const auto vars = p.variables();
  return std::all_of(vars.begin(), vars.end(), [](Var v) { return v == Var::x || v == Var::y; });
}

Polynomial swap_xy(const Polynomial& p) {
  return p.substitute({{Var::x, Polynomial::variable(Var::y)}, {Var::y, Polynomial::variable(Var::x)}});
}

/// Offsets tried around a stated substitution, nearest first.
std::vector<std::map<Var, Rational>> shift_candidates(const AffineSub& sub, bool integer_steps) {
  std::vector<std::map<Var, Rational>> out;
  const auto& maps = sub.maps();
  if (integer_steps && maps.size() == 2) {
    std::vector<std::pair<int, int>> grid;
    for (int a = -12; a <= 12; ++a)
      for (int b = -12; b <= 12; ++b) grid.emplace_back(a, b);
    std::stable_sort(grid.begin(), grid.end(), [](auto p, auto q) {
      return std::abs(p.first) + std::abs(p.second) < std::abs(q.first) + std::abs(q.second);
    });
    for (auto [a, b] : grid) {
      if (a == 0 && b == 0) continue;
      out.push_back({{maps[0].target, Rational(a)}, {maps[1].target, Rational(b)}});
    }
  } else if (maps.size() == 1) {
    for (int s = 1; s <= 40; ++s) {
      out.push_back({{maps[0].target, make_rational(s, 4)}});
      out.push_back({{maps[0].target, make_rational(-s, 4)}});
    }
  }
  return out;
}

CurveEntry build_entry(const CurveFixture& fx) {
  CurveEntry e{fx.label,
               EquationFamily::parse(fx.family),
               Polynomial::parse(fx.polynomial),
               parse_affine_substitution(fx.substitution),
               0,
               Polynomial::parse(fx.polynomial),
               parse_affine_substitution(fx.substitution),
               false,
               std::nullopt,
               false,
               "none",
               fx.constant,
               Var::x,
               Var::y};
  if (fx.ratio == "y/x") {
    e.ratio_numerator = Var::y;
    e.ratio_denominator = Var::x;
  }
  const Polynomial target = residual_polynomial(e.family);

  auto try_sub = [&](const Polynomial& curve, const AffineSub& sub) -> std::optional<Rational> {
    const auto v = check_proportional(curve, target, sub.as_substitution());
    if (v.equal) return v.factor;
    return std::nullopt;
  };
  auto accept = [&](const Polynomial& curve, const AffineSub& sub, const Rational& scale, const char* how) {
    e.polynomial = curve;
    e.substitution = sub;
    e.scale = scale;
    e.verified_by = how;
  };

  if (fx.body_substitution) {
    e.body_substitution = parse_affine_substitution(*fx.body_substitution);
    e.body_verified = try_sub(e.printed_polynomial, *e.body_substitution).has_value();
  }

  if (auto s = try_sub(e.printed_polynomial, e.printed_substitution)) {
    e.printed_verified = true;
    accept(e.printed_polynomial, e.printed_substitution, *s, "printed");
    return e;
  }
  const bool xy = is_plane_xy(e.printed_polynomial);
  for (const auto& shift : shift_candidates(e.printed_substitution, xy)) {
    const AffineSub sub = e.printed_substitution.shifted(shift);
    if (auto s = try_sub(e.printed_polynomial, sub)) {
      accept(e.printed_polynomial, sub, *s, "offset-search");
      return e;
    }
  }
  if (xy) {
    const Polynomial swapped = swap_xy(e.printed_polynomial);
    if (auto s = try_sub(swapped, e.printed_substitution)) {
      accept(swapped, e.printed_substitution, *s, "swapped-variables");
      return e;
    }
    for (const auto& shift : shift_candidates(e.printed_substitution, true)) {
      const AffineSub sub = e.printed_substitution.shifted(shift);
      if (auto s = try_sub(swapped, sub)) {
        accept(swapped, sub, *s, "swapped-variables");
        return e;
      }
    }
  }
  if (e.body_verified) {
    accept(e.printed_polynomial, *e.body_substitution, *try_sub(e.printed_polynomial, *e.body_substitution),
           "body-form");
  }
  return e;
}

}  // namespace

bool is_verified(const CurveEntry& c) { return c.verified_by != "none"; }

const std::vector<CurveEntry>& curve_table() {
  static const std::vector<CurveEntry> table = [] {
    std::vector<CurveEntry> out;
    for (const auto& fx : paper_fixtures().curves) out.push_back(build_entry(fx));
    return out;
  }();
  return table;
}

bool has_curve(const EquationFamily& f) {
  const auto& t = curve_table();
  return std::any_of(t.begin(), t.end(), [&](const CurveEntry& c) { return c.family == f && is_verified(c); });
}

const CurveEntry& curve(const EquationFamily& f) {
  for (const auto& c : curve_table())
    if (c.family == f && is_verified(c)) return c;
  throw NoCurveError("no tabulated curve for " + f.name());
}

std::string curve_table_csv() {
  std::ostringstream out;
  out << "family,label,polynomial,substitution,printed_substitution,verified_offset,verified_by\n";
  for (const auto& c : curve_table()) {
    out << c.family.name() << ',' << c.label << ",\"" << c.polynomial.to_string() << "\",\""
        << (is_verified(c) ? c.substitution.to_string() : std::string()) << "\",\"" << c.printed_substitution.to_string()
        << "\"," << (is_verified(c) && !c.printed_verified ? "yes" : "no") << ',' << c.verified_by << '\n';
  }
  return out.str();
}

std::vector<IdentityCheck> identity_suite() {
  std::vector<IdentityCheck> out;
  for (const auto& fx : paper_fixtures().identities) {
    IdentityCheck check;
    check.name = fx.name;
    check.statement = fx.equation;
    const Polynomial lhs = Polynomial::parse(fx.equation);
    Polynomial rhs;
    if (!fx.against.empty()) {
      check.against = fx.against;
      rhs = residual_polynomial(EquationFamily::parse(fx.against));
    } else {
      check.against = fx.against_equation;
      rhs = Polynomial::parse(fx.against_equation);
    }
    check.substitution = substitution_text(fx.substitution);
    const Substitution sub = parse_substitution(fx.substitution);
    const auto verdict = check_proportional(lhs, rhs, sub);
    check.equal = verdict.equal;
    check.factor = verdict.factor;
    check.difference = verdict.difference;
    if (!check.equal && fx.shift) {
      const Var target = *var_from_name(*fx.shift);
      const AffineSub stated = parse_affine_substitution({{*fx.shift, fx.substitution.at(*fx.shift)}});
      for (const auto& shift : shift_candidates(stated, false)) {
        const AffineSub moved = stated.shifted(shift);
        Substitution alt = sub;
        alt[target] = moved.as_substitution().at(target);
        if (check_proportional(lhs, rhs, alt).equal) check.verified_alternatives.push_back(moved.to_string());
      }
    }
    if (check.equal) {
      check.note = "verifies as printed";
    } else if (!check.verified_alternatives.empty()) {
      check.note = "printed substitution fails; verifies with " + check.verified_alternatives.front();
    } else {
      check.note = fx.shift ? "fails as printed and under every quarter shift within 10" : "fails as printed";
    }
    out.push_back(std::move(check));
  }

  for (const auto& c : curve_table()) {
    IdentityCheck check;
    check.name = "curve " + c.label;
    check.statement = c.printed_polynomial.to_string();
    check.against = c.family.name();
    check.substitution = c.printed_substitution.to_string();
    const auto verdict =
        check_proportional(c.printed_polynomial, residual_polynomial(c.family), c.printed_substitution.as_substitution());
    check.equal = verdict.equal;
    check.factor = verdict.factor;
    check.difference = verdict.difference;
    if (!check.equal && is_verified(c)) {
      std::string alt;
      if (c.verified_by == "swapped-variables") alt = "curve " + c.polynomial.to_string() + " with ";
      check.verified_alternatives.push_back(alt + c.substitution.to_string());
    }
    if (c.body_substitution && c.body_verified && c.verified_by != "body-form" &&
        !(c.printed_verified && *c.body_substitution == c.printed_substitution) &&
        !(*c.body_substitution == c.substitution)) {
      check.verified_alternatives.push_back(c.body_substitution->to_string());
    }
    if (check.equal) {
      check.note = "verifies as printed";
    } else if (is_verified(c)) {
      check.note = "printed substitution fails; verified by " + c.verified_by;
      if (c.body_substitution && c.body_verified) check.note += "; derivation-text substitution verifies";
    } else {
      check.note = "no substitution within the searched offsets verifies";
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace pascalpell
