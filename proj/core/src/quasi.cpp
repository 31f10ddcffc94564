// Quadrature scans and quasi-solutions.

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pascalpell/contfrac.hpp"
#include "pascalpell/search.hpp"

namespace pascalpell {

std::vector<QuadratureHit> quadrature_scan(const PellClassSeq& s, QuadratureSide side, const Integer& max_u,
                                           std::size_t start_alpha) {
  std::vector<QuadratureHit> hits;
  IntPair term = s.seed;
  for (std::size_t alpha = 0;; ++alpha) {
    if (!s.problem.satisfies(term.first, term.second)) throw std::logic_error("sequence term off the curve");
    if (alpha >= start_alpha) {
      if (abs(term.first) > max_u) break;
      const Integer& u = term.first;
      if (side == QuadratureSide::c4_u_plus_5_and_j) {
        const Integer j = (term.second + 1) / 2;
        auto ru = as_perfect_square(u + 5);
        auto rj = j >= 0 ? as_perfect_square(j) : std::nullopt;
        if (ru && rj) hits.push_back({alpha, u, j, *ru, *rj});
      } else {
        auto ru = u >= 0 ? as_perfect_square(u) : std::nullopt;
        auto rv = term.second >= 0 ? as_perfect_square(term.second) : std::nullopt;
        if (ru && rv) hits.push_back({alpha, u, term.second, *ru, *rv});
      }
    } else if (abs(term.first) > max_u) {
      break;
    }
    term = unit_multiply(s.problem.D(), term, s.unit);
  }
  return hits;
}

namespace {

/// g(v) = -2v^3 + 40v^2 - 128v + c(u); strictly decreasing for v >= 12.
__int128 eq317_value(__int128 u, __int128 v) {
  return u * u * u - 2 * v * v * v - 35 * u * u + 40 * v * v + 259 * u - 128 * v - 225;
}

}  // namespace

std::vector<std::pair<Integer, Integer>> eq317_integer_points(std::uint64_t bound) {
  if (bound > 2'000'000'000ULL) throw std::invalid_argument("eq317 scan bound too large for 128-bit evaluation");
  std::vector<std::pair<Integer, Integer>> out;
  const auto b = static_cast<__int128>(bound);
  auto to_int = [](__int128 v) { return Integer(static_cast<unsigned long>(v)); };
  for (__int128 u = 0; u <= b; ++u) {
    for (__int128 v = 0; v <= std::min<__int128>(16, b); ++v)
      if (eq317_value(u, v) == 0) out.emplace_back(to_int(u), to_int(v));
    if (b <= 16) continue;
    // Decreasing branch: find v in (16, b] with g(v) = 0 by bisection.
    __int128 lo = 17, hi = b;
    if (eq317_value(u, lo) < 0 || eq317_value(u, hi) > 0) continue;
    while (lo < hi) {
      const __int128 mid = lo + (hi - lo) / 2;
      if (eq317_value(u, mid) > 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (eq317_value(u, lo) == 0) out.emplace_back(to_int(u), to_int(lo));
  }
  return out;
}

std::vector<std::pair<Integer, Integer>> eq317_square_points(std::uint64_t bound) {
  std::vector<std::pair<Integer, Integer>> out;
  for (auto& [u, v] : eq317_integer_points(bound))
    if (as_perfect_square(u) && as_perfect_square(v)) out.emplace_back(u, v);
  return out;
}

std::vector<CubicRecovery> eq317_recovered(std::uint64_t bound) {
  std::vector<CubicRecovery> out;
  for (auto& [u, v] : eq317_square_points(bound)) {
    const Integer ru = isqrt(u);
    const Integer rv = isqrt(v);
    // u = (2n + 5)^2, v = (2m + 4)^2 with n, m >= 0.
    if (ru < 5 || rv < 4 || ru % 2 == 0 || rv % 2 != 0) continue;
    out.push_back({u, v, (ru - 5) / 2, (rv - 4) / 2});
  }
  return out;
}

QuasiSpec default_quasi_spec(const EquationFamily& f) {
  const CurveEntry& c = curve(f);
  if (c.constant.empty()) throw NoCurveError("no approximation constant tabulated for " + f.name());
  const auto vars = c.polynomial.variables();
  if (!std::all_of(vars.begin(), vars.end(), [](Var v) { return v == Var::x || v == Var::y; }))
    throw NoCurveError("no plane curve in x, y for " + f.name());
  return QuasiSpec{AlgebraicRoot::parse(c.constant), c.ratio_numerator, c.ratio_denominator, 1, 1,
                   MedianDomain::quarters, true};
}

QuasiSpec c3_integer_list_spec() {
  return QuasiSpec{AlgebraicRoot::parse("2^(2/3)"), Var::y, Var::x, 1, 1, MedianDomain::integers, false};
}

QuasiSpec c3_half_list_spec() {
  return QuasiSpec{AlgebraicRoot::parse("2^(1/3)"), Var::x, Var::y, 1, 2, MedianDomain::halves, false};
}

namespace {

/// Nearest grid point to m (ties toward larger m).
QuarterInt round_to_grid(const Rational& m, MedianDomain d) {
  const int step = grid_step(d);
  Rational t = m * 4 / step + make_rational(1, 2);
  t.canonicalize();
  return QuarterInt::from_quarters(floor(t) * step);
}

}  // namespace

std::vector<QuasiSolution> quasi_generate(const EquationFamily& f, const QuasiSpec& spec, std::size_t count,
                                          unsigned start_bits) {
  if (count == 0) throw std::invalid_argument("quasi_generate needs count >= 1");
  const CurveEntry& c = curve(f);
  const AffineSub& sub = c.substitution;
  const AffineMap* xm = sub.find(Var::x);
  const AffineMap* ym = sub.find(Var::y);
  if (xm == nullptr || ym == nullptr) throw NoCurveError("no plane curve in x, y for " + f.name());

  std::vector<QuasiSolution> out;
  for (std::size_t terms = 64; out.size() < count; terms *= 2) {
    if (terms > 4096) throw std::runtime_error("too few usable convergents for " + f.name());
    out.clear();
    const auto conv = convergents(expand(spec.constant, terms, start_bits));
    for (const auto& cv : conv) {
      std::map<Var, Rational> value{{spec.numerator, Rational(cv.p * spec.numerator_scale)},
                                    {spec.denominator, Rational(cv.q * spec.denominator_scale)}};
      // Invert the substitution: x and y back to n and m.
      Rational n_val, m_val;
      for (const AffineMap* am : {xm, ym}) {
        const Rational src = sub.inverse(am->target, value.at(am->target));
        (am->source == Var::n ? n_val : m_val) = src;
      }
      if (n_val.get_den() != 1 || n_val < 2) continue;
      auto exact_m = QuarterInt::from_rational(m_val);
      QuarterInt m;
      if (exact_m && on_grid(*exact_m, spec.domain)) {
        m = *exact_m;
      } else if (spec.round_off_grid) {
        m = round_to_grid(m_val, spec.domain);
      } else {
        continue;
      }
      QuasiSolution s;
      s.index = cv.index;
      s.p = cv.p;
      s.q = cv.q;
      s.n = n_val.get_num();
      s.m = m;
      s.m_offset = m_val - m.value();
      s.m_offset.canonicalize();
      s.residual = residual(f, s.n, m);
      Integer scale = 1;
      for (int i = 0; i < f.k() - 2; ++i) scale *= s.n;
      s.order_ratio = abs(s.residual) / scale;
      s.order_ratio.canonicalize();
      out.push_back(std::move(s));
      if (out.size() == count) break;
    }
  }
  return out;
}

std::vector<QuasiSolution> quasi_generate(const EquationFamily& f, std::size_t count) {
  return quasi_generate(f, default_quasi_spec(f), count);
}

}  // namespace pascalpell
