#include <doctest.h>

#include "pascalpell/polynomial.hpp"
#include "support/generators.hpp"

using namespace pascalpell;

namespace {
Polynomial P(const char* text) { return Polynomial::parse(text); }
Polynomial X(Var v) { return Polynomial::variable(v); }
}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("parsing and canonical text") {
  CHECK(P("x^6 - 2y^6 - 35x^4 + 40y^4 + 259x^2 - 128y^2 - 225").to_string() ==
        "x^6 - 2*y^6 - 35*x^4 + 40*y^4 + 259*x^2 - 128*y^2 - 225");
  CHECK(P("(2n+1)^2 - 8m^2 - 1") == P("4n^2 + 4n - 8m^2"));
  CHECK(P("4(n+1)^3 - 23409/4").coefficient(Monomial{}) == make_rational(4 * 4 - 23409, 4));
  CHECK(P("x*y/2 + x y/2") == P("xy"));
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("x^"), std::invalid_argument);
  CHECK_THROWS_AS(P("x / y"), std::invalid_argument);
  CHECK_THROWS_AS(P("(x + 1"), std::invalid_argument);
  CHECK_THROWS_AS(P("z + 1"), std::invalid_argument);
}

TEST_CASE("degrees, variables and leading terms") {
  const Polynomial p = P("16x^5 - y^5 - 80x^3 + 10y^3 + 64x - 9y");
  CHECK(p.degree() == 5);
  CHECK(p.degree_in(Var::y) == 5);
  CHECK(p.variables() == std::vector<Var>{Var::x, Var::y});
  CHECK(p.leading_term().second == 16);
  CHECK(p.is_integral());
  CHECK(P("x/6 + y/4").denominator_lcm() == 12);
  CHECK_THROWS(Polynomial().leading_term());
}

TEST_CASE("ring laws and evaluation homomorphism (property)") {
  testgen::Rng rng(0xabc);
  const std::vector<Var> vars{Var::x, Var::y, Var::n};
  for (int i = 0; i < 150; ++i) {
    const Polynomial a = rng.polynomial(vars, 3, 4);
    const Polynomial b = rng.polynomial(vars, 3, 4);
    const Polynomial c = rng.polynomial(vars, 2, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
    const std::map<Var, Rational> pt{{Var::x, rng.rational(20, 5)}, {Var::y, rng.rational(20, 5)}, {Var::n, rng.rational(9, 3)}};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + c).evaluate(pt) == a.evaluate(pt) + c.evaluate(pt));
    CHECK(Polynomial::parse(a.to_string()) == a);
  }
}

TEST_CASE("substitution agrees with evaluation (property)") {
  testgen::Rng rng(0xdef);
  for (int i = 0; i < 100; ++i) {
    const Polynomial curve = rng.polynomial({Var::x, Var::y}, 4, 5);
    const Substitution sub{{Var::x, Polynomial(rng.rational(4, 2)) * X(Var::n) + Polynomial(rng.rational(5, 4))},
                           {Var::y, Polynomial(rng.rational(4, 2)) * X(Var::m) + Polynomial(rng.rational(5, 4))}};
    const Rational n = rng.rational(30, 4), m = rng.rational(30, 4);
    const Rational x = sub.at(Var::x).evaluate({{Var::n, n}});
    const Rational y = sub.at(Var::y).evaluate({{Var::m, m}});
    CHECK(curve.substitute(sub).evaluate({{Var::n, n}, {Var::m, m}}) == curve.evaluate({{Var::x, x}, {Var::y, y}}));
  }
}

TEST_CASE("affine substitutions") {
  const AffineSub s({{Var::x, Var::n, 2, 1}, {Var::y, Var::m, 4, 1}});
  CHECK(s.to_string() == "x=2*n + 1, y=4*m + 1");
  CHECK(s.forward(Var::y, make_rational(9, 2)) == 19);
  CHECK(s.inverse(Var::x, 11) == 5);
  CHECK(s.inverse(Var::y, 26) == make_rational(25, 4));
  CHECK(s.find(Var::n) == nullptr);
  const AffineSub t = s.shifted({{Var::x, 2}});
  CHECK(t.find(Var::x)->offset == 3);
  CHECK(t.find(Var::y)->offset == 1);
  CHECK_THROWS_AS(AffineSub({{Var::x, Var::n, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(AffineSub({{Var::x, Var::n, 1, 0}, {Var::x, Var::m, 1, 0}}), std::invalid_argument);
}

}
