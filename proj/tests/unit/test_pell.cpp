#include <doctest.h>

#include <set>

#include "pascalpell/fixtures.hpp"
#include "pascalpell/pell.hpp"
#include "support/surd.hpp"

using namespace pascalpell;
using surd::Surd;

namespace {
Integer Z(const char* text) { return parse_integer(text); }

std::vector<Integer> period_of(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

/// Exhaustive least y >= 1 with x^2 - D y^2 = target for some x >= 1.
std::optional<IntPair> least_solution(long D, long target, long y_limit) {
  for (long y = 1; y <= y_limit; ++y) {
    const Integer rhs = Integer(D) * y * y + target;
    if (rhs <= 0) continue;
    if (auto x = as_perfect_square(rhs)) return IntPair{*x, y};
  }
  return std::nullopt;
}

Integer exact_integer(const Surd& s) {
  REQUIRE(s.is_rational());
  REQUIRE(s.a.get_den() == 1);
  return s.a.get_num();
}
}  // namespace

TEST_SUITE("pell") {

TEST_CASE("problem construction") {
  CHECK_THROWS_AS(PellProblem(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(PellProblem(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(PellProblem(8, 0), std::invalid_argument);
  const PellProblem p(8, 8, Congruence{1, 2});
  CHECK(p.satisfies(4, 1));
  CHECK(p.admits_y(-7));
  CHECK_FALSE(p.admits_y(2));
}

TEST_CASE("continued fraction of square roots against frozen expansions") {
  // Expansions from an independent computer-algebra session.
  struct Row { long D; long a0; std::initializer_list<long> period; };
  const Row rows[] = {
      {2, 1, {2}},
      {3, 1, {1, 2}},
      {8, 2, {1, 4}},
      {13, 3, {1, 1, 1, 1, 6}},
      {61, 7, {1, 4, 3, 1, 2, 2, 1, 3, 4, 1, 14}},
      {94, 9, {1, 2, 3, 1, 1, 5, 1, 8, 1, 5, 1, 1, 3, 2, 1, 18}},
  };
  for (const auto& row : rows) {
    const SqrtCF cf = sqrt_cf(row.D);
    CHECK(cf.a0 == row.a0);
    CHECK(cf.period == period_of(row.period));
  }
  const SqrtCF cf8 = sqrt_cf(8);
  CHECK(sqrt_cf_term(cf8, 0) == 2);
  CHECK(sqrt_cf_term(cf8, 1) == 1);
  CHECK(sqrt_cf_term(cf8, 2) == 4);
  CHECK(sqrt_cf_term(cf8, 5) == 1);
  CHECK_THROWS_AS(sqrt_cf(49), std::invalid_argument);
}

TEST_CASE("fundamental units against frozen values") {
  struct Row { long D; const char* x; const char* y; const char* nx; const char* ny; };
  const Row rows[] = {
      {2, "3", "2", "1", "1"},
      {3, "2", "1", nullptr, nullptr},
      {8, "3", "1", nullptr, nullptr},
      {13, "649", "180", "18", "5"},
      {61, "1766319049", "226153980", "29718", "3805"},
      {94, "2143295", "221064", nullptr, nullptr},
  };
  for (const auto& row : rows) {
    const PellFundamental f = fundamental_unit(row.D);
    CHECK(f.unit == IntPair{Z(row.x), Z(row.y)});
    if (row.nx) {
      REQUIRE(f.negative.has_value());
      CHECK(*f.negative == IntPair{Z(row.nx), Z(row.ny)});
    } else {
      CHECK_FALSE(f.negative.has_value());
    }
  }
}

TEST_CASE("fundamental units are minimal for every nonsquare D up to 50") {
  for (long D = 2; D <= 50; ++D) {
    if (as_perfect_square(D)) continue;
    const PellFundamental f = fundamental_unit(D);
    const long y1 = f.unit.second.get_si();
    CHECK(f.unit.first * f.unit.first - D * f.unit.second * f.unit.second == 1);
    const auto least = least_solution(D, 1, y1);
    REQUIRE(least.has_value());
    CHECK(*least == f.unit);
    const auto neg = least_solution(D, -1, y1);
    CHECK(neg.has_value() == f.negative.has_value());
    if (neg) CHECK(*neg == *f.negative);
  }
}

TEST_CASE("class sequences") {
  const auto unit8 = class_sequences(PellProblem(8, 1), 1000);
  REQUIRE(unit8.size() == 1);
  CHECK(unit8[0].seed == IntPair{3, 1});
  const auto terms = generate(unit8[0], 4);
  CHECK(terms == std::vector<IntPair>{{3, 1}, {17, 6}, {99, 35}, {577, 204}});

  // y^2 - 3x^2 = -2 in (y, x): x runs through 2n + 1 for n = 5, 20, 76.
  const auto q3 = class_sequences(PellProblem(3, -2), 1000);
  REQUIRE_FALSE(q3.empty());
  std::set<Integer> xs;
  for (const auto& s : q3)
    for (const auto& [y, x] : generate(s, 8)) xs.insert(x);
  CHECK(xs.count(11) == 1);
  CHECK(xs.count(41) == 1);
  CHECK(xs.count(153) == 1);

  // u^2 - 2v^2 = 8 with v = 2w - 1 odd has no solutions at all.
  CHECK(class_sequences(PellProblem(2, 8, Congruence{1, 2}), 1000).empty());
  CHECK(class_sequences(PellProblem(2, 8), 1000).size() >= 1);

  // Four classes of u^2 - 8v^2 = 8 with v odd under the big unit.
  const auto big = class_sequences(PellProblem(8, 8, Congruence{1, 2}), 1000);
  CHECK(big.size() >= 1);
}

TEST_CASE("class representatives are stable under the unit action") {
  const IntPair unit{3, 1};
  IntPair p{4, 1};
  const IntPair rep = class_representative(8, p, unit);
  for (int i = 0; i < 6; ++i) {
    p = unit_multiply(8, p, unit);
    CHECK(class_representative(8, p, unit) == rep);
    CHECK(class_representative(8, {p.first, -p.second}, unit) == rep);
  }
}

TEST_CASE("distinct classes generate disjoint solution sets") {
  struct Case { long D; long c; };
  for (const auto& [D, c] : {Case{8, 8}, Case{2, 7}, Case{3, -2}, Case{13, 12}, Case{7, 9}}) {
    const auto classes = class_sequences(PellProblem(D, c), 2000);
    const Integer limit = Integer(10) * 10 * 10 * 10 * 10 * 10 * 10 * 10 * 10 * 10;
    const Integer cap = limit * limit * limit;  // 10^30
    std::set<IntPair> seen;
    for (const auto& s : classes) {
      for (const auto& term : generate(s, 200)) {
        if (abs(term.first) > cap) break;
        CHECK_MESSAGE(seen.insert(term).second, "D=" << D << " c=" << c);
      }
    }
  }
}

TEST_CASE("generated terms satisfy the equation and increase (property)") {
  for (const auto& s : {c2_class(), q3_class(), small_solution_orbit()}) {
    const auto terms = generate(s, 40);
    CHECK(terms.front() == s.seed);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      CHECK(s.problem.satisfies(terms[i].first, terms[i].second));
      if (i > 0) CHECK(terms[i].first > terms[i - 1].first);
    }
  }
  for (const auto& s : prop32_orbits()) {
    const auto terms = generate(s, 20);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      CHECK(s.problem.satisfies(terms[i].first, terms[i].second));
      if (i > 0) CHECK(terms[i].first > terms[i - 1].first);
    }
  }
  const PellClassSeq unit1{PellProblem(8, 1), {3, 1}, {3, 1}};
  std::vector<Integer> xs;
  for (const auto& t : generate(unit1, 5)) xs.push_back(t.first);
  CHECK(xs == std::vector<Integer>{3, 17, 99, 577, 3363});
  CHECK(generate(unit1, 0).empty());
}

TEST_CASE("the first printed big-unit orbit regenerates") {
  const auto orbits = prop32_orbits();
  REQUIRE(orbits.size() == 4);
  CHECK(orbits[0].unit == IntPair{577, 204});
  std::vector<Integer> js;
  for (const auto& [u, v] : generate(orbits[0], 3)) js.push_back((v + 1) / 2);
  CHECK(js == std::vector<Integer>{0, 120, 137904});
  const auto small = generate(small_solution_orbit(), 2);
  CHECK(small[0] == IntPair{4, 1});
  CHECK(small[1] == IntPair{20, 7});
}

TEST_CASE("closed forms in Q(sqrt 2) and Q(sqrt 3) agree with the recurrence") {
  const Surd up2{3, 2, 2}, down2{3, -2, 2};
  const auto c2 = generate(c2_class(), 9);
  for (unsigned alpha = 1; alpha <= 9; ++alpha) {
    const Surd n = make_rational(1, 4) * (down2.pow(alpha) + up2.pow(alpha) - Surd{2, 0, 2});
    const Surd m = Surd{0, make_rational(-1, 8), 2} * (down2.pow(alpha) - up2.pow(alpha));
    CHECK(2 * exact_integer(n) + 1 == c2[alpha - 1].first);
    CHECK(exact_integer(m) == c2[alpha - 1].second);
  }

  const Surd up3{2, 1, 3}, down3{2, -1, 3};
  const auto q3 = generate(q3_class(), 12);
  for (unsigned alpha = 1; alpha <= 12; ++alpha) {
    const Surd y = make_rational(1, 2) * (up3.pow(alpha) * Surd{-1, 1, 3} - Surd{1, 1, 3} * down3.pow(alpha));
    const Surd x = make_rational(1, 6) * (up3.pow(alpha) * Surd{3, -1, 3} + Surd{3, 1, 3} * down3.pow(alpha));
    CHECK(exact_integer(y) == q3[alpha - 1].first);
    CHECK(exact_integer(x) == q3[alpha - 1].second);
  }

  // The four big-unit orbits, u and j = (v + 1)/2, with alpha matching the term index.
  const Surd U{577, 408, 2}, Ubar{577, -408, 2};
  const Surd quarter{make_rational(1, 4), 0, 2};
  auto forms = [&](int which, unsigned a) -> std::pair<Surd, Surd> {
    const Surd Ua = U.pow(a), Ub = Ubar.pow(a);
    switch (which) {
      case 0:
        return {Ub * Surd{2, 1, 2} - Surd{-2, 1, 2} * Ua,
                quarter * (Surd{2, 0, 2} + Surd{-1, 1, 2} * Ua - Ub * Surd{1, 1, 2})};
      case 1:
        return {Ub * Surd{10, 7, 2} + Surd{10, -7, 2} * Ua,
                quarter * (Surd{2, 0, 2} - Surd{7, 5, 2} * Ub - Ua * Surd{7, -5, 2})};
      case 2:
        return {Ua * Surd{2, 1, 2} - Surd{-2, 1, 2} * Ub,
                quarter * (Surd{2, 0, 2} + Surd{1, 1, 2} * Ua - Ub * Surd{-1, 1, 2})};
      default:
        return {Ua * Surd{10, 7, 2} - Surd{-10, 7, 2} * Ub,
                quarter * (Surd{2, 0, 2} + Surd{7, 5, 2} * Ua - Ub * Surd{-7, 5, 2})};
    }
  };
  const auto orbits = prop32_orbits();
  for (int s = 0; s < 4; ++s) {
    const auto terms = generate(orbits[static_cast<std::size_t>(s)], 8);
    for (unsigned a = 0; a < 8; ++a) {
      const auto [u, j] = forms(s, a);
      CHECK(exact_integer(u) == terms[a].first);
      CHECK(2 * exact_integer(j) - 1 == terms[a].second);
    }
  }
  // The closed form for the fourth orbit gives j = 4060 at alpha = 1, not the printed 460.
  CHECK(exact_integer(forms(3, 1).second) == 4060);

  // The small orbit of u^2 = 8v^2 + 8.
  const Surd u3{3, 2, 2}, d3{3, -2, 2};
  const auto small = generate(small_solution_orbit(), 10);
  for (unsigned a = 1; a <= 10; ++a) {
    const Surd u = d3.pow(a) * Surd{2, 1, 2} - Surd{-2, 1, 2} * u3.pow(a);
    const Surd v = make_rational(1, 2) * (u3.pow(a) * Surd{-1, 1, 2} - Surd{1, 1, 2} * d3.pow(a));
    CHECK(exact_integer(u) == small[a - 1].first);
    CHECK(exact_integer(v) == small[a - 1].second);
  }
}

TEST_CASE("verify_paper_sequences") {
  const PaperSequenceReport r = verify_paper_sequences();
  CHECK(r.tuples.size() == 37);
  CHECK(r.matched() == 36);
  REQUIRE(r.mismatched() == 1);
  for (const auto& t : r.tuples) {
    if (t.sequence == "(2.1)" || t.sequence == "(2.4)" || t.sequence == "(3.8)" || t.sequence == "(3.9)" ||
        t.sequence == "(3.10)")
      CHECK_MESSAGE(t.match, t.sequence << " #" << t.index);
    if (!t.match) {
      CHECK(t.sequence == "(3.11)");
      CHECK(t.printed == "(22964,460)");
      CHECK(t.computed == "(22964,4060)");
    }
  }
}

TEST_CASE("sequence json lines") {
  const std::string text = sequence_json_lines(c2_class(), 2);
  CHECK(text ==
        "{\"D\":\"8\",\"c\":\"1\",\"seed\":[\"3\",\"1\"],\"alpha\":0,\"x\":\"3\",\"y\":\"1\"}\n"
        "{\"D\":\"8\",\"c\":\"1\",\"seed\":[\"3\",\"1\"],\"alpha\":1,\"x\":\"17\",\"y\":\"6\"}\n");
}

}  // TEST_SUITE
