#pragma once

// Exact number substrate: big integers, rationals, quarter-integers, integer
// roots and certified dyadic enclosures of single radicals base^(1/k).
//
// Integer and Rational are GMP's C++ classes. Rational values built through
// make_rational() are always canonical (reduced, positive denominator).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pascalpell {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "123", "-7", "19/2". Throws std::invalid_argument on bad input.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// floor(value) and ceil(value) for rationals.
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Number of bits in |value| (0 for zero).
std::size_t bit_length(const Integer& value);

/// A median m restricted to Z/4, stored as its quarter count q (m = q/4).
class QuarterInt {
 public:
  QuarterInt() = default;
  QuarterInt(long whole) : quarters_(Integer(whole) * 4) {}  // NOLINT: integers are quarter-ints

  static QuarterInt from_quarters(Integer quarters);
  /// Empty when value is not a multiple of 1/4.
  static std::optional<QuarterInt> from_rational(const Rational& value);

  const Integer& quarters() const { return quarters_; }
  Rational value() const { return make_rational(quarters_, 4); }

  bool is_integer() const;
  /// True for strict halves (odd multiples of 1/2).
  bool is_half() const;

  /// "10", "9/2", "37/4".
  std::string to_string() const;

  friend bool operator==(const QuarterInt& a, const QuarterInt& b) { return a.quarters_ == b.quarters_; }
  friend std::strong_ordering operator<=>(const QuarterInt& a, const QuarterInt& b) {
    const int c = cmp(a.quarters_, b.quarters_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  Integer quarters_ = 0;
};

/// floor(sqrt(n)). Throws std::domain_error for n < 0.
Integer isqrt(const Integer& n);

/// floor(n^(1/k)). Negative n is allowed only for odd k. Throws std::domain_error otherwise.
Integer ikth_root(const Integer& n, unsigned long k);

/// r with r*r == n, if n is a perfect square.
std::optional<Integer> as_perfect_square(const Integer& n);

/// r with r^k == n, if n is a perfect k-th power (n >= 0).
std::optional<Integer> as_perfect_power(const Integer& n, unsigned long k);

/// Closed interval [lo, hi] with dyadic rational endpoints.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  /// Throws std::invalid_argument unless lo <= hi and both denominators are powers of two.
  DyadicInterval(Rational lo, Rational hi);
  static DyadicInterval point(const Rational& value);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& value) const { return lo_ <= value && value <= hi_; }
  bool is_subset_of(const DyadicInterval& other) const { return other.lo_ <= lo_ && hi_ <= other.hi_; }
  bool is_point() const { return lo_ == hi_; }

  /// Enclosure of c * this for an exact rational c.
  DyadicInterval scaled(const Rational& c) const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

 private:
  Rational lo_ = 0;
  Rational hi_ = 0;
};

bool is_dyadic(const Rational& value);

/// The real number base^(1/index), base > 0 rational, index >= 1.
class AlgebraicRoot {
 public:
  /// Throws std::domain_error when base <= 0 or index == 0.
  AlgebraicRoot(Rational base, unsigned index);

  /// (base^numer)^(1/denom), e.g. power(2, 3, 2) is 2^(3/2) = 8^(1/2).
  static AlgebraicRoot power(const Rational& base, unsigned numer, unsigned denom);

  /// Parses "2^(3/2)", "(4/3)^(1/6)", "8^(1/2)", "sqrt(3)".
  static AlgebraicRoot parse(std::string_view text);

  const Rational& base() const { return base_; }
  unsigned index() const { return index_; }

  /// The exact value when base is a perfect index-th power of a rational.
  std::optional<Rational> exact_value() const;
  bool is_irrational() const { return !exact_value().has_value(); }

  /// Human label, e.g. "2^(3/2)" when built via power()/parse(), else "8^(1/2)".
  const std::string& label() const { return label_; }

 private:
  Rational base_;
  unsigned index_;
  std::string label_;
};

/// Certified enclosure of the root with width <= 2^-bits. Nested in bits.
DyadicInterval refine(const AlgebraicRoot& root, unsigned bits);

}  // namespace pascalpell
