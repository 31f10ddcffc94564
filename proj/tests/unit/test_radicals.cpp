#include <doctest.h>

#include "pascalpell/search.hpp"
#include "support/generators.hpp"
#include "support/radicals.hpp"

using namespace pascalpell;

namespace {
constexpr mpfr_prec_t kPrec = 256;

/// Largest integer N >= 1 with 4N^3 - 4N <= target.
Integer tetra_floor(const Integer& target) {
  Integer N = ikth_root(target / 4, 3);
  if (N < 1) N = 1;
  auto g = [](const Integer& x) { return Integer(4 * x * x * x - 4 * x); };
  while (g(N + 1) <= target) ++N;
  while (N > 1 && g(N) > target) --N;
  return N;
}

Integer cubic_at(const Integer& u, const Integer& v) {
  return u * u * u - 2 * v * v * v - 35 * u * u + 40 * v * v + 259 * u - 128 * v - 225;
}

/// The enclosure lies in [F, F+1), or contains F when the true value is the integer F.
void check_floor(const radicals::Interval& iv, const Integer& F, bool exact) {
  const auto [lo, hi] = iv.bounds();
  if (exact) {
    CHECK(lo <= Rational(F));
    CHECK(Rational(F) <= hi);
  } else {
    CHECK(lo >= Rational(F));
    CHECK(hi < Rational(F + 1));
  }
  CHECK(hi - lo < make_rational(1, Integer(1) << 100));
}
}  // namespace

TEST_SUITE("radicals") {

TEST_CASE("tetrahedral radical inverse at random integer m") {
  testgen::Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    const Integer m = rng.uniform(0, 1000000000);
    const Integer y = 2 * m + 1;
    const Integer target = y * y * y - y;
    const Integer F = tetra_floor(target);
    const bool exact = 4 * F * F * F - 4 * F == target;
    check_floor(radicals::tetra_n_plus_1(Rational(m), kPrec), F, exact);
  }
  // m = 1 solves it with n = 1.
  check_floor(radicals::tetra_n_plus_1(1, kPrec), 2, true);
}

TEST_CASE("tetrahedral radical brackets the exact inverse at random n") {
  const EquationFamily c3(3, Quartile::median);
  testgen::Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    const Integer n = rng.uniform(2, 1000000);
    // Exact bracket: the largest integer m whose m side does not exceed the n side.
    Integer lo = 1, hi = n + 1;
    while (lo < hi) {
      const Integer mid = (lo + hi + 1) / 2;
      if (m_side(c3, Rational(mid)) <= n_side(c3, n)) lo = mid;
      else hi = mid - 1;
    }
    const auto below = radicals::tetra_n_plus_1(Rational(lo), kPrec).bounds();
    const auto above = radicals::tetra_n_plus_1(Rational(lo + 1), kPrec).bounds();
    CHECK(below.second <= Rational(n + 1));
    CHECK(above.first > Rational(n + 1));
  }
}

TEST_CASE("half-integer radical form recovers n + 1 exactly") {
  testgen::Rng rng(63);
  for (int t = 0; t < 100; ++t) {
    const Integer n = rng.uniform(1, 1000000);
    const Integer q = 4 * n * (n + 1) * (n + 2);
    const auto [lo, hi] = radicals::tetra_half_n_plus_1(Rational(q), kPrec).bounds();
    CHECK(lo <= Rational(n + 1));
    CHECK(Rational(n + 1) <= hi);
    CHECK(hi - lo < make_rational(1, Integer(1) << 100));
  }
}

TEST_CASE("cubic radical for the sixth-order curve") {
  testgen::Rng rng(64);
  for (int t = 0; t < 100; ++t) {
    const Integer n = rng.uniform(1, 1000000);
    const Integer u = (2 * n + 5) * (2 * n + 5);
    // F(v) = cubic_at(u, v) decreases past its turning points; V is the last v with F(V) >= 0.
    Integer V = ikth_root(u * u * u / 2, 3);
    while (cubic_at(u, V + 1) >= 0) ++V;
    while (cubic_at(u, V) < 0) --V;
    check_floor(radicals::cubic_v(Rational(u), kPrec), V, cubic_at(u, V) == 0);
  }
  check_floor(radicals::cubic_v(49, kPrec), 36, true);
  check_floor(radicals::cubic_v(729, kPrec), 576, true);
  // Every square point found by the integer scan lies on the radical branch.
  for (const auto& [u, v] : eq317_square_points(1000000)) {
    if (u < 49) continue;
    check_floor(radicals::cubic_v(Rational(u), kPrec), v, true);
  }
}

}  // TEST_SUITE
