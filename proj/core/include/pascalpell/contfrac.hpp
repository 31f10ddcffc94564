#pragma once

// Certified simple continued fractions of single radicals base^(1/k).
// Every partial quotient is read off a dyadic enclosure narrow enough that its
// floor is unambiguous; precision starts at 128 bits and doubles on ambiguity.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pascalpell/exactnum.hpp"

namespace pascalpell {

struct Convergent {
  Integer p;
  Integer q;
  std::size_t index = 0;
};

struct CFExpansion {
  AlgebraicRoot constant;
  std::vector<Integer> quotients;
  /// Working precision (bits) the last quotient needed.
  unsigned precision_bits = 0;
};

/// Throws std::invalid_argument for rational constants or n_terms == 0.
CFExpansion expand(const AlgebraicRoot& r, std::size_t n_terms, unsigned start_bits = 128);

std::vector<Convergent> convergents(const CFExpansion& e);

/// Decides |r - p/q| < 1/q^2 exactly. Throws std::invalid_argument for q < 1.
bool is_diophantine(const AlgebraicRoot& r, const Integer& p, const Integer& q);

struct A1Entry {
  std::size_t index = 0;  // convergent index
  Integer p;
  Integer q;
  bool diophantine = false;
  /// "yes", "no" (a printed entry aligned here differs) or "paper-blank".
  std::string matches_paper;
};

struct A1Discrepancy {
  std::size_t position = 0;   // position in the printed list
  Rational printed;
  bool printed_diophantine = false;
  std::optional<Rational> computed;  // convergent at the aligned index
};

struct A1Row {
  std::string constant;
  std::vector<A1Entry> entries;
  /// Printed entries found among the convergents.
  std::size_t printed_matched = 0;
  std::size_t printed_total = 0;
  bool paper_blank = false;
  std::vector<A1Discrepancy> discrepancies;
};

/// All nine constants of the approximation table; convergents per row = max(terms, printed span).
std::vector<A1Row> a1_table(std::size_t terms = 12);

/// CSV: constant,index,p,q,diophantine,matches_paper
std::string a1_table_csv(const std::vector<A1Row>& rows);

}  // namespace pascalpell
