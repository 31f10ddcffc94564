#pragma once

// Residue tables: the pairs (a mod p, b mod p) at which a two-variable curve
// can vanish. Built by full p^2 enumeration and stored as a bitset for O(1)
// membership in the search loop.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pascalpell/exactnum.hpp"
#include "pascalpell/polynomial.hpp"

namespace pascalpell {

class ResidueTable {
 public:
  /// Largest modulus accepted; tables hold p^2 bits.
  static constexpr std::uint32_t kMaxModulus = 1U << 12;

  /// Throws std::invalid_argument when modulus < 2 or > kMaxModulus, or the curve has
  /// more than two variables. Rational coefficients are cleared by their common
  /// denominator first (the zero set is unchanged). Variables default to the curve's
  /// own in canonical order (x before y, u before w).
  ResidueTable(const Polynomial& curve, std::uint32_t modulus);
  ResidueTable(const Polynomial& curve, std::uint32_t modulus, Var first, Var second);

  const Polynomial& curve() const { return curve_; }
  std::uint32_t modulus() const { return modulus_; }
  Var first() const { return first_; }
  Var second() const { return second_; }

  bool admits(std::uint32_t a, std::uint32_t b) const {
    const std::size_t i = std::size_t(a) * modulus_ + b;
    return (bits_[i >> 6] >> (i & 63U)) & 1U;
  }
  /// Reduces arbitrary integers first.
  bool admits(const Integer& a, const Integer& b) const;
  /// No b is admissible for this a.
  bool row_empty(std::uint32_t a) const { return row_count_[a] == 0; }

  std::uint64_t admissible_count() const { return count_; }
  Rational fraction() const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

 private:
  void build();

  Polynomial curve_;
  Polynomial integral_;
  std::uint32_t modulus_;
  Var first_;
  Var second_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> row_count_;
  std::uint64_t count_ = 0;
};

ResidueTable admissible_table(const Polynomial& curve, std::uint32_t modulus);

/// 1 - fraction: the share of residue pairs the table eliminates.
Rational prune_fraction(const ResidueTable& t);

/// First modulus whose table is empty: a certificate that the curve has no integer points.
std::optional<std::uint32_t> prove_empty(const Polynomial& curve, const std::vector<std::uint32_t>& moduli);

/// Every modulus in the list whose table is empty.
std::vector<std::uint32_t> certifying_moduli(const Polynomial& curve, const std::vector<std::uint32_t>& moduli);

/// Exact evaluation of the curve at integer values reduced mod p, without any table.
std::uint32_t evaluate_mod(const Polynomial& curve, Var first, Var second, const Integer& a, const Integer& b,
                           std::uint32_t modulus);

/// The curve u^2 - 2(2w - 1)^2 - 8.
Polynomial eq314_curve();

/// Resolves named curves ("eq314", "P_2".."P_6", "Q_2") or parses a polynomial.
Polynomial curve_by_name(const std::string& name_or_expression);

}  // namespace pascalpell
