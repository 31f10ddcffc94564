#pragma once

// Simplicial numbers and the median/quartile equation families
//
//   C(n+k-1, k) = w * C(m+k-2, k) + C(m+k-2, k-1),   w in {2, 4, 4/3},
//
// their plane curves, the asymmetric triangle C(n,k)_a = C(n,k) + a*C(n-1,k-1),
// and exact identity checking of every change of variables used to derive
// the curves.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascalpell/exactnum.hpp"
#include "pascalpell/polynomial.hpp"

namespace pascalpell {

enum class Quartile { median, q1, q3 };

std::string to_string(Quartile q);
/// Accepts "median", "q1", "q3" (case-insensitive). Throws std::invalid_argument.
Quartile parse_quartile(std::string_view text);

/// Column order k in [2, 6] and the quartile weight.
class EquationFamily {
 public:
  /// Throws std::invalid_argument unless 2 <= k <= 6.
  EquationFamily(int k, Quartile quartile);

  /// "C4", "C2-Q3", "C6-Q1" style names; "C3-MEDIAN" is also accepted by parse().
  static EquationFamily parse(std::string_view text);

  int k() const { return k_; }
  Quartile quartile() const { return quartile_; }
  /// 2 for the median, 4 for the first quartile, 4/3 for the third.
  Rational weight() const;

  /// "C2" for medians, "C2-Q3" otherwise.
  std::string name() const;

  /// Every family with k in 2..6, median first.
  static std::vector<EquationFamily> all();

  friend bool operator==(const EquationFamily&, const EquationFamily&) = default;

 private:
  int k_;
  Quartile quartile_;
};

/// x (x-1) ... (x-k+1) / k!  for rational x.
Rational binom(const Rational& x, unsigned k);

/// Left side C(n+k-1, k).
Rational n_side(const EquationFamily& f, const Integer& n);
/// Right side w*C(m+k-2, k) + C(m+k-2, k-1).
Rational m_side(const EquationFamily& f, const Rational& m);

/// n_side - m_side. Zero iff (n, m) solves the family.
Rational residual(const EquationFamily& f, const Integer& n, const QuarterInt& m);

/// The residual as an exact polynomial in the variables n and m.
Polynomial residual_polynomial(const EquationFamily& f);

/// C(x, k) as a polynomial in x.
Polynomial binom_polynomial(const Polynomial& x, unsigned k);

/// C(n, k) + a*C(n-1, k-1). Requires 0 <= k <= n.
Rational asym_binom(const Integer& n, unsigned k, const Rational& a);

/// Residual of the asymmetric floors C2^a / C3^a with exact a and an enclosure of b:
///   order 2:  C(n+1,2)_a - 2*C(m,2)_b - m - b
///   order 3:  C(n+1,3)_a - 2*C(m,3)_b - C(m,2)_b
/// The residual is affine in b, so the returned interval is certified.
DyadicInterval asym_residual(int order, const Integer& n, const QuarterInt& m, const Rational& a,
                             const DyadicInterval& b);

/// Result of comparing two polynomials after a substitution.
struct IdentityVerdict {
  bool equal = false;
  /// lhs - rhs after substitution; zero when equal.
  Polynomial difference;
};

/// Expands lhs and rhs under sub and compares canonical forms exactly.
IdentityVerdict check_identity(const Polynomial& lhs, const Polynomial& rhs, const Substitution& sub = {});

/// Result of comparing a polynomial with a multiple of another.
struct ProportionalityVerdict {
  bool equal = false;
  /// c with lhs = c * rhs when equal; otherwise the ratio of leading coefficients used.
  Rational factor;
  /// lhs - factor * rhs after substitution.
  Polynomial difference;
};

/// Tests lhs(sub) == c * rhs(sub) for a nonzero constant c taken from the leading terms.
ProportionalityVerdict check_proportional(const Polynomial& lhs, const Polynomial& rhs, const Substitution& sub = {});

/// One tabulated plane curve and the substitution tying it to a family.
struct CurveEntry {
  std::string label;             // fixture label, e.g. "P_6"
  EquationFamily family;
  Polynomial polynomial;         // the curve as verified
  AffineSub substitution;        // verified: curve(sub) = scale * residual
  Rational scale;
  Polynomial printed_polynomial; // as printed in the curve table
  AffineSub printed_substitution;
  bool printed_verified = false;
  /// Substitution stated in the derivation text, when it differs from the table's.
  std::optional<AffineSub> body_substitution;
  bool body_verified = false;
  /// "printed", "offset-search", "swapped-variables", "body-form", or "none" when nothing verifies.
  std::string verified_by;
  /// Constant approximated by ratio_numerator/ratio_denominator along quasi-solutions.
  std::string constant;
  Var ratio_numerator = Var::x;
  Var ratio_denominator = Var::y;
};

/// Thrown by curve() for families without a tabulated curve.
class NoCurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_verified(const CurveEntry& c);

/// The verified curve for f. Throws NoCurveError ("no tabulated curve") when the family
/// has no curve or none of its tabulated substitutions verifies.
const CurveEntry& curve(const EquationFamily& f);
/// Whether curve(f) would succeed.
bool has_curve(const EquationFamily& f);

/// All tabulated curves: P_2, Q_2, P_3..P_6 and the verified quartile forms.
const std::vector<CurveEntry>& curve_table();

/// CSV: family,label,polynomial,substitution,printed_substitution,verified_offset,verified_by
std::string curve_table_csv();

/// One derivation step checked by the identity suite.
struct IdentityCheck {
  std::string name;        // fixture label
  std::string statement;   // the printed equation, as lhs - rhs
  std::string against;     // "C3" or an equation name
  std::string substitution;
  /// True when the statement verifies exactly as printed (up to a constant factor).
  bool equal = false;
  Rational factor;
  Polynomial difference;
  /// For failing checks with a searchable shift: the shifts that do verify.
  std::vector<std::string> verified_alternatives;
  std::string note;
};

/// Runs every identity fixture and one row per tabulated curve.
std::vector<IdentityCheck> identity_suite();

/// Substitution text from the data files, e.g. {'x': "2n+1", 'y': "m"}.
Substitution parse_substitution(const std::map<char, std::string>& text);
/// Throws std::invalid_argument unless every entry is affine in one variable.
AffineSub parse_affine_substitution(const std::map<char, std::string>& text);

}  // namespace pascalpell
