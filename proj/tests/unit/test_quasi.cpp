#include <doctest.h>

#include <algorithm>

#include "pascalpell/fixtures.hpp"
#include "pascalpell/search.hpp"

using namespace pascalpell;

namespace {
Integer Z(const char* text) { return parse_integer(text); }

Rational worst_ratio(const std::vector<QuasiSolution>& rows) {
  Rational worst = 0;
  for (const auto& r : rows) worst = std::max(worst, r.order_ratio);
  return worst;
}
}  // namespace

TEST_SUITE("quasi") {

TEST_CASE("quadrature over the big-unit orbits finds nothing past the small solutions") {
  const Integer limit = Z("10000000000000000");
  const auto small = quadrature_scan(small_solution_orbit(), QuadratureSide::c4_u_plus_5_and_j, 20);
  REQUIRE(small.size() == 2);
  CHECK(small[0].u == 4);
  CHECK(small[0].second == 1);
  CHECK(small[0].root_u == 3);
  CHECK(small[1].u == 20);
  CHECK(small[1].second == 4);
  for (const auto& orbit : prop32_orbits()) {
    CHECK(quadrature_scan(orbit, QuadratureSide::c4_u_plus_5_and_j, limit, 1).empty());
  }
  // The small orbit itself, past its first two terms.
  CHECK(quadrature_scan(small_solution_orbit(), QuadratureSide::c4_u_plus_5_and_j, limit, 2).empty());
}

TEST_CASE("integer points of the sixth-order cubic") {
  const auto points = eq317_integer_points(1000000);
  CHECK(points.size() == 11);
  for (const auto& [u, v] : points) {
    CHECK(u * u * u - 2 * v * v * v - 35 * u * u + 40 * v * v + 259 * u - 128 * v - 225 == 0);
  }
  const auto squares = eq317_square_points(1000000);
  for (const auto& [u, v] : squares) {
    CHECK(as_perfect_square(u).has_value());
    CHECK(as_perfect_square(v).has_value());
  }
  const auto recovered = eq317_recovered(1000000);
  REQUIRE(recovered.size() == 3);
  CHECK(recovered[0].u == 25);
  CHECK(recovered[0].n == 0);
  CHECK(recovered[0].m == 0);
  CHECK(recovered[1].u == 49);
  CHECK(recovered[1].v == 36);
  CHECK(recovered[1].n == 1);
  CHECK(recovered[1].m == 1);
  CHECK(recovered[2].u == 729);
  CHECK(recovered[2].v == 576);
  CHECK(recovered[2].n == 11);
  CHECK(recovered[2].m == 10);
  // The printed hits are exactly the recovered points with n, m >= 1.
  const auto& printed = paper_fixtures().eq317_hits;
  std::vector<std::pair<Integer, Integer>> positive;
  for (const auto& r : recovered)
    if (r.n >= 1 && r.m >= 1) positive.emplace_back(r.u, r.v);
  CHECK(positive == printed);
}

TEST_CASE("printed tetrahedral quasi-solution lists regenerate") {
  const auto& fx = paper_fixtures();
  const EquationFamily c3(3, Quartile::median);
  const auto whole = quasi_generate(c3, c3_integer_list_spec(), fx.c3_quasi_integer.m_plus_1.size());
  REQUIRE(whole.size() == fx.c3_quasi_integer.m_plus_1.size());
  for (std::size_t i = 0; i < whole.size(); ++i) {
    CHECK(whole[i].m.value() + 1 == fx.c3_quasi_integer.m_plus_1[i]);
    CHECK(whole[i].n + 1 == fx.c3_quasi_integer.n_plus_1[i]);
  }
  CHECK(whole[0].m == QuarterInt(9));
  CHECK(whole[0].n == 11);

  const auto half = quasi_generate(c3, c3_half_list_spec(), fx.c3_quasi_half.m_plus_1.size());
  REQUIRE(half.size() == fx.c3_quasi_half.m_plus_1.size());
  for (std::size_t i = 0; i < half.size(); ++i) {
    CHECK(half[i].m.value() + 1 == fx.c3_quasi_half.m_plus_1[i]);
    CHECK(half[i].n + 1 == fx.c3_quasi_half.n_plus_1[i]);
    CHECK(half[i].m.is_half());
  }
}

TEST_CASE("quasi-solutions carry exact residuals") {
  for (const auto& f : EquationFamily::all()) {
    std::optional<QuasiSpec> spec;
    try {
      spec.emplace(default_quasi_spec(f));
    } catch (const NoCurveError&) {
      continue;
    }
    for (const auto& q : quasi_generate(f, *spec, 15)) {
      CHECK(q.residual == residual(f, q.n, q.m));
      CHECK(q.n >= 2);
      CHECK(on_grid(q.m, spec->domain));
      Integer scale = 1;
      for (int i = 2; i < f.k(); ++i) scale *= q.n;
      CHECK(q.order_ratio == abs(q.residual) / scale);
    }
  }
}

TEST_CASE("order ratios stay bounded over the first 15 terms") {
  // Bounds frozen from evaluation; the quarter grid is the default.
  struct Row { const char* family; long num; long den; };
  for (const auto& row : {Row{"C2", 0, 1}, Row{"C3", 1, 4}, Row{"C4", 1, 4}, Row{"C5", 1, 8}, Row{"C6", 1, 16},
                          Row{"C2-Q3", 1, 8}}) {
    const EquationFamily f = EquationFamily::parse(row.family);
    const auto rows = quasi_generate(f, 15);
    CHECK(rows.size() == 15);
    CHECK_MESSAGE(worst_ratio(rows) == make_rational(row.num, row.den), row.family);
  }
}

TEST_CASE("quasi-solutions are stable under a higher starting precision") {
  for (const char* name : {"C2", "C3", "C4", "C5", "C6", "C2-Q3"}) {
    const EquationFamily f = EquationFamily::parse(name);
    const QuasiSpec spec = default_quasi_spec(f);
    const auto a = quasi_generate(f, spec, 15, 128);
    const auto b = quasi_generate(f, spec, 15, 512);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].n == b[i].n);
      CHECK(a[i].m == b[i].m);
      CHECK(a[i].residual == b[i].residual);
    }
  }
}

TEST_CASE("families without a plane curve have no default spec") {
  CHECK_THROWS_AS(default_quasi_spec(EquationFamily(6, Quartile::q1)), NoCurveError);
}

}  // TEST_SUITE
