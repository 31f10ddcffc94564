#pragma once

// x^2 - D y^2 = c: periodic continued fraction of sqrt(D), fundamental units,
// particular solutions, and fundamental sequences generated by the integer
// recurrence (x, y) <- (x1 x + D y1 y, x1 y + y1 x).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pascalpell/exactnum.hpp"

namespace pascalpell {

using IntPair = std::pair<Integer, Integer>;

/// y ≡ residue (mod modulus).
struct Congruence {
  Integer residue;
  Integer modulus;
};

class PellProblem {
 public:
  /// Throws std::invalid_argument when D <= 0, D is a perfect square, or c == 0.
  PellProblem(Integer D, Integer c, std::optional<Congruence> y_condition = std::nullopt);

  const Integer& D() const { return D_; }
  const Integer& c() const { return c_; }
  const std::optional<Congruence>& y_condition() const { return y_condition_; }

  bool satisfies(const Integer& x, const Integer& y) const { return x * x - D_ * y * y == c_; }
  bool admits_y(const Integer& y) const;

 private:
  Integer D_;
  Integer c_;
  std::optional<Congruence> y_condition_;
};

struct SqrtCF {
  Integer a0;
  std::vector<Integer> period;  // a1 .. aL, repeating
};

/// Throws std::invalid_argument for D <= 0 or perfect squares.
SqrtCF sqrt_cf(const Integer& D);

/// Partial quotient i (0-based) of the periodic expansion.
const Integer& sqrt_cf_term(const SqrtCF& cf, std::size_t i);

struct PellFundamental {
  IntPair unit;                       // least x1, y1 > 0 with x1^2 - D y1^2 = 1
  std::optional<IntPair> negative;    // least solution of x^2 - D y^2 = -1, if any
};

PellFundamental fundamental_unit(const Integer& D);

/// Unit action: (x, y) * (ux, uy).
IntPair unit_multiply(const Integer& D, const IntPair& p, const IntPair& unit);

struct PellClassSeq {
  PellProblem problem;
  IntPair seed;
  IntPair unit;
};

/// Least-y representative (y >= 1, x >= 0) of the orbit of p under sign changes,
/// conjugation and the unit.
IntPair class_representative(const Integer& D, IntPair p, const IntPair& unit);

/// One sequence per unit class among seeds 0 <= y0 <= seed_bound, x0 >= 0.
/// An empty result only means nothing was found below the bound.
std::vector<PellClassSeq> class_sequences(const PellProblem& p, const Integer& seed_bound);

/// Term 0 is the seed; each term is checked against the equation.
/// Throws std::logic_error if a term fails to satisfy it.
std::vector<IntPair> generate(const PellClassSeq& s, std::size_t count);

/// {"D","c","seed":[x,y],"alpha","x","y"} per line, big integers as decimal strings.
std::string sequence_json_lines(const PellClassSeq& s, std::size_t count);

/// One printed tuple compared with its regenerated value.
struct SequenceTupleCheck {
  std::string sequence;  // fixture label of the printed list
  std::size_t index = 0;
  std::string printed;   // "(676,120)"
  std::string computed;
  bool match = false;
};

struct PaperSequenceReport {
  std::vector<SequenceTupleCheck> tuples;
  std::size_t matched() const;
  std::size_t mismatched() const { return tuples.size() - matched(); }
};

/// Regenerates the printed lists for the triangular median and third quartile and
/// the four sequences of u^2 = 8(2j-1)^2 + 8, comparing each tuple.
PaperSequenceReport verify_paper_sequences();

/// The four (u, v) orbits of u^2 - 8 v^2 = 8 (v = 2j - 1) under the unit (577, 204)
/// (that is 577 + 408 sqrt 2), seeded as in the fixtures.
std::vector<PellClassSeq> prop32_orbits();

/// The orbit of (4, 1) under the fundamental unit (3, 1); its first terms are the
/// two small solutions listed ahead of each sequence.
PellClassSeq small_solution_orbit();

/// The third-quartile class Y^2 - 3 X^2 = -2 with Y = 4m + 1, X = 2n + 1, seed (1, 1).
PellClassSeq q3_class();

/// The triangular-median class X^2 - 8 Y^2 = 1 with X = 2n + 1, Y = m, seed (3, 1).
PellClassSeq c2_class();

}  // namespace pascalpell
