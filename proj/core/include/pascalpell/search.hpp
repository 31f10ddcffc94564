#pragma once

// Exhaustive search for exact solutions (n, m) of an equation family with m on
// a quarter grid, plus exact inversion, quadrature scans over Pell sequences and
// quasi-solutions built from convergents.
//
// The scan keeps both sides as scaled integers
//   L(n) = den_w 4^k (n)(n+1)...(n+k-1)
//   R(q) = num_w prod_{i<k} (q + 4(k-2-i)) + den_w 4k prod_{i<k-1} (q + 4(k-2-i)),  m = q/4,
// advanced by forward-difference tables, so each step costs k additions.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pascalpell/exactnum.hpp"
#include "pascalpell/pascal.hpp"
#include "pascalpell/pell.hpp"
#include "pascalpell/sieve.hpp"

namespace pascalpell {

enum class MedianDomain { integers, halves, quarters };

std::string to_string(MedianDomain d);
/// "integers", "halves", "quarters" (case-insensitive). Throws std::invalid_argument.
MedianDomain parse_domain(std::string_view text);
/// Grid step in quarter units: 4, 2 or 1.
int grid_step(MedianDomain d);
bool on_grid(const QuarterInt& m, MedianDomain d);

struct Solution {
  Integer n;
  QuarterInt m;
  friend bool operator==(const Solution&, const Solution&) = default;
  friend bool operator<(const Solution& a, const Solution& b) {
    return a.n < b.n || (a.n == b.n && a.m < b.m);
  }
};

/// Scaled sides as described above; residual(f, n, q/4) == 0 iff the two agree.
Integer scaled_n_side(const EquationFamily& f, const Integer& n);
Integer scaled_m_side(const EquationFamily& f, const Integer& q);

/// The m on the domain grid with residual zero. Uniqueness holds for m >= 1 where the
/// m side is strictly increasing; below that the grid is checked point by point.
std::optional<QuarterInt> invert_m(const EquationFamily& f, const Integer& n, MedianDomain d);

/// A sieve together with how the family's substitution feeds it.
struct SieveBinding {
  ResidueTable table;
  AffineSub substitution;  // table variables in terms of n and m
};

/// Tables from the family's verified plane curve for the moduli that prune anything.
std::vector<SieveBinding> default_sieves(const EquationFamily& f);
/// Tables for explicit moduli (empty when the family has no plane curve).
std::vector<SieveBinding> sieves_for(const EquationFamily& f, const std::vector<std::uint32_t>& moduli);

struct SearchOptions {
  unsigned workers = 1;
  /// Range size per work unit; 0 picks one from N and the worker count.
  std::uint64_t chunk = 0;
  /// Re-verify roughly this share of pruned candidates (selected by a hash of n).
  double audit_rate = 0.01;
};

struct SearchReport {
  EquationFamily family{2, Quartile::median};
  Integer N;
  MedianDomain domain = MedianDomain::quarters;
  std::vector<Solution> solutions;         // n, m >= 2
  std::vector<Solution> trivial_excluded;  // n <= 1 or m < 2
  std::uint64_t tested = 0;
  std::uint64_t pruned = 0;
  std::uint64_t audited = 0;
  std::vector<std::uint32_t> sieve_moduli;
  std::string arithmetic;  // "int128", "int256" or "mpz"
  unsigned workers = 1;
  std::size_t ranges = 1;
  double seconds = 0;
};

/// Covering, disjoint, ordered ranges [lo, hi] of n from 2 to N.
std::vector<std::pair<Integer, Integer>> partition(const Integer& N, const Integer& chunk);

/// Scans n in [lo, hi] for solutions with m >= 2. No trivial scan, no timing.
SearchReport exhaustive_range(const EquationFamily& f, const Integer& lo, const Integer& hi, MedianDomain d,
                              const std::vector<SieveBinding>& sieves, double audit_rate = 0.01);

/// Merges range reports in order. Counts add; solutions concatenate and are sorted.
SearchReport merge_reports(const std::vector<SearchReport>& parts);

/// Scans n = 2..N, plus the trivial region (n <= 1 or m < 2), and re-verifies every
/// solution. Throws std::invalid_argument for N < 2 and std::logic_error if a
/// solution fails re-verification or the audit finds a pruned solution.
SearchReport exhaustive(const EquationFamily& f, const Integer& N, MedianDomain d,
                        const std::vector<SieveBinding>& sieves, const SearchOptions& options = {});

/// Solutions with n <= 1 or m < 2 (m >= 0) for n <= N.
std::vector<Solution> trivial_solutions(const EquationFamily& f, const Integer& N, MedianDomain d);

// Quadrature.

enum class QuadratureSide {
  /// u + 5 and j = (v + 1)/2 both perfect squares.
  c4_u_plus_5_and_j,
  /// u and v both perfect squares.
  c6_u_and_v,
};

struct QuadratureHit {
  std::size_t alpha = 0;
  Integer u;
  Integer second;  // j or v, per side
  Integer root_u;
  Integer root_second;
};

/// Terms alpha = start .. while u <= max_u of the sequence, filtered by the side conditions.
std::vector<QuadratureHit> quadrature_scan(const PellClassSeq& s, QuadratureSide side, const Integer& max_u,
                                           std::size_t start_alpha = 0);

/// Integer points (u, v), 0 <= u, v <= bound, of u^3 - 2v^3 - 35u^2 + 40v^2 + 259u - 128v - 225 = 0.
std::vector<std::pair<Integer, Integer>> eq317_integer_points(std::uint64_t bound);
/// Those integer points with u and v both perfect squares.
std::vector<std::pair<Integer, Integer>> eq317_square_points(std::uint64_t bound);

/// A square point mapped back through u = (2n + 5)^2, v = (2m + 4)^2.
struct CubicRecovery {
  Integer u;
  Integer v;
  Integer n;
  Integer m;
};

/// Square points whose roots have the right parity and give n, m >= 0.
std::vector<CubicRecovery> eq317_recovered(std::uint64_t bound);

// Quasi-solutions.

struct QuasiSpec {
  AlgebraicRoot constant;
  Var numerator;            // curve variable set to p * numerator_scale
  Var denominator;          // curve variable set to q * denominator_scale
  Integer numerator_scale = 1;
  Integer denominator_scale = 1;
  MedianDomain domain = MedianDomain::halves;
  /// Off-grid m is rounded to the nearest grid point (true) or the convergent is skipped.
  bool round_off_grid = true;
};

struct QuasiSolution {
  std::size_t index = 0;  // convergent index
  Integer p;
  Integer q;
  Integer n;
  QuarterInt m;
  Rational m_offset;  // unrounded m minus m
  Rational residual;
  Rational order_ratio;  // |residual| / n^(k-2)
};

/// Spec from the family's curve: its constant and ratio orientation, quarter grid, rounding on.
/// Throws NoCurveError when the family has no plane curve with a constant.
QuasiSpec default_quasi_spec(const EquationFamily& f);

/// The first `count` quasi-solutions with n >= 2 drawn from successive convergents.
std::vector<QuasiSolution> quasi_generate(const EquationFamily& f, std::size_t count);
std::vector<QuasiSolution> quasi_generate(const EquationFamily& f, const QuasiSpec& spec, std::size_t count,
                                          unsigned start_bits = 128);

/// Specs reproducing the two printed tetrahedral lists (integer and half-integer m).
QuasiSpec c3_integer_list_spec();
QuasiSpec c3_half_list_spec();

}  // namespace pascalpell
