#pragma once

// Printed values from the source tables, kept as a versioned data file
// (data/paper_fixtures.json) and compiled into the library. Computations are
// diffed against these; the fixture itself is never corrected.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pascalpell/exactnum.hpp"

namespace pascalpell {

struct MedianPairs {
  std::vector<QuarterInt> m;
  std::vector<Integer> n;
};

struct OrbitFixture {
  std::string name;
  std::pair<Integer, Integer> seed;  // (u, v) with v = 2j - 1
  std::vector<std::pair<Integer, Integer>> tuples;  // printed (u, j)
};

struct QuasiListFixture {
  std::string constant;
  std::vector<Rational> m_plus_1;
  std::vector<Rational> n_plus_1;
};

struct A1RowFixture {
  std::string constant;
  /// Empty optional: the constant has no printed row. Empty vector: the row is printed blank.
  std::optional<std::vector<Rational>> printed;
};

using TextSubstitution = std::map<char, std::string>;

struct CurveFixture {
  std::string label;
  std::string family;
  std::string polynomial;
  TextSubstitution substitution;
  std::optional<TextSubstitution> body_substitution;
  std::string constant;
  std::string ratio;  // "x/y", "y/x" or empty
};

struct IdentityFixture {
  std::string name;
  std::string equation;
  std::string against;           // family name, or empty
  std::string against_equation;  // used when against is empty
  TextSubstitution substitution;
  std::optional<char> shift;     // variable whose substitution offset may be searched
};

struct PaperFixtures {
  int version = 0;
  MedianPairs c2_median;
  MedianPairs c2_q3;
  std::vector<OrbitFixture> prop32_orbits;
  std::vector<std::pair<Integer, Integer>> prop32_excluded;
  QuasiListFixture c3_quasi_integer;
  QuasiListFixture c3_quasi_half;
  std::vector<A1RowFixture> a1_table;
  std::vector<CurveFixture> curves;
  std::vector<IdentityFixture> identities;
  std::vector<std::pair<Integer, Integer>> quadrature_excluded;
  std::vector<std::pair<Integer, Integer>> eq317_hits;
  std::vector<std::pair<Integer, QuarterInt>> c6_solutions;
};

/// Fixtures compiled into the library, or the set installed before first use.
const PaperFixtures& paper_fixtures();

/// Replaces the compiled-in fixtures. Throws std::logic_error once paper_fixtures() has run.
void install_fixtures(PaperFixtures fixtures);

/// Throws std::runtime_error on malformed input.
PaperFixtures parse_fixtures(std::string_view json_text);
PaperFixtures load_fixtures(const std::filesystem::path& path);

/// The JSON text compiled into the library.
std::string_view embedded_fixtures_json();

}  // namespace pascalpell
