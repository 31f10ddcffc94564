#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// fixed set of named variables. Canonical form: graded order (total degree
// descending, then exponents lexicographically in variable order), no zero
// coefficients. The tabulated curves have integer coefficients; rational
// coefficients appear after substituting quarter-integer shifts.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pascalpell/exactnum.hpp"

namespace pascalpell {

enum class Var : std::uint8_t { x, y, n, m, k, u, v, w, i, j };

inline constexpr std::size_t kVarCount = 10;

char var_name(Var v);
std::optional<Var> var_from_name(char c);

struct Monomial {
  std::array<std::uint8_t, kVarCount> exps{};

  unsigned degree() const;
  unsigned exponent(Var v) const { return exps[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict weak order putting higher total degree first, then lex by variable.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial;
using Substitution = std::map<Var, Polynomial>;

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial variable(Var v);
  static Polynomial monomial(const Monomial& mono, const Rational& coeff);

  /// Parses expressions such as "x^6 - 2y^6 + 259x^2 - 225" or "4(n+1)^3 - 23409/4".
  /// Accepts + - * / (by constants only) ^ (non-negative integer exponents),
  /// parentheses and implicit multiplication. Throws std::invalid_argument.
  static Polynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_integral() const;
  unsigned degree() const;
  unsigned degree_in(Var v) const;
  std::vector<Var> variables() const;

  /// Leading (first in canonical order) term; throws on the zero polynomial.
  const std::pair<const Monomial, Rational>& leading_term() const;
  Rational coefficient(const Monomial& mono) const;

  /// LCM of all coefficient denominators (1 for integral polynomials).
  Integer denominator_lcm() const;

  Polynomial substitute(const Substitution& sub) const;
  Rational evaluate(const std::map<Var, Rational>& point) const;

  /// Canonical text, e.g. "x^6 - 2*y^6 - 35*x^4 + 40*y^4 + 259*x^2 - 128*y^2 - 225".
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const;

 private:
  void add_term(const Monomial& mono, const Rational& coeff);

  Terms terms_;
};

/// target = scale * source + offset, with scale != 0.
struct AffineMap {
  Var target;
  Var source;
  Rational scale;
  Rational offset;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// An invertible affine change of variables, e.g. {x -> 2n+1, y -> m}.
class AffineSub {
 public:
  AffineSub() = default;
  /// Throws std::invalid_argument on a zero scale or a repeated target.
  explicit AffineSub(std::vector<AffineMap> maps);

  const std::vector<AffineMap>& maps() const { return maps_; }
  const AffineMap* find(Var target) const;

  Substitution as_substitution() const;

  /// Value of target given the source value.
  Rational forward(Var target, const Rational& source_value) const;
  /// Source value producing target_value (the inverse map).
  Rational inverse(Var target, const Rational& target_value) const;

  /// Same scales, offsets shifted by the given amounts per target.
  AffineSub shifted(const std::map<Var, Rational>& offsets) const;

  /// "x=2n+1, y=m".
  std::string to_string() const;

  friend bool operator==(const AffineSub&, const AffineSub&) = default;

 private:
  std::vector<AffineMap> maps_;
};

}  // namespace pascalpell
