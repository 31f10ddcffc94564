#include "pascalpell/fixtures.hpp"

#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pascalpell {

namespace detail {
extern const std::string_view kPaperFixturesJson;
}

namespace {

using nlohmann::json;

Integer integer_of(const json& j) { return parse_integer(j.get<std::string>()); }
Rational rational_of(const json& j) { return parse_rational(j.get<std::string>()); }

QuarterInt quarter_of(const json& j) {
  auto q = QuarterInt::from_rational(rational_of(j));
  if (!q) throw std::runtime_error("fixture value is not a quarter-integer: " + j.get<std::string>());
  return *q;
}

std::pair<Integer, Integer> pair_of(const json& j) { return {integer_of(j.at(0)), integer_of(j.at(1))}; }

MedianPairs pairs_of(const json& j) {
  MedianPairs p;
  for (const auto& m : j.at("m")) p.m.push_back(quarter_of(m));
  for (const auto& n : j.at("n")) p.n.push_back(integer_of(n));
  if (p.m.size() != p.n.size()) throw std::runtime_error("fixture pair lists differ in length");
  return p;
}

QuasiListFixture quasi_of(const json& j) {
  QuasiListFixture q;
  q.constant = j.at("constant").get<std::string>();
  for (const auto& v : j.at("m_plus_1")) q.m_plus_1.push_back(rational_of(v));
  for (const auto& v : j.at("n_plus_1")) q.n_plus_1.push_back(rational_of(v));
  return q;
}

TextSubstitution substitution_of(const json& j) {
  TextSubstitution sub;
  for (const auto& [key, value] : j.items()) {
    if (key.size() != 1) throw std::runtime_error("substitution key must be one variable: " + key);
    sub.emplace(key.front(), value.get<std::string>());
  }
  return sub;
}

}  // namespace

PaperFixtures parse_fixtures(std::string_view json_text) {
  try {
    const json doc = json::parse(json_text);
    PaperFixtures f;
    f.version = doc.at("version").get<int>();
    f.c2_median = pairs_of(doc.at("c2_median"));
    f.c2_q3 = pairs_of(doc.at("c2_q3"));
    for (const auto& o : doc.at("prop32_orbits")) {
      OrbitFixture orbit;
      orbit.name = o.at("name").get<std::string>();
      orbit.seed = pair_of(o.at("seed"));
      for (const auto& t : o.at("tuples")) orbit.tuples.push_back(pair_of(t));
      f.prop32_orbits.push_back(std::move(orbit));
    }
    for (const auto& t : doc.at("prop32_excluded")) f.prop32_excluded.push_back(pair_of(t));
    f.c3_quasi_integer = quasi_of(doc.at("c3_quasi_integer"));
    f.c3_quasi_half = quasi_of(doc.at("c3_quasi_half"));
    for (const auto& row : doc.at("a1_table")) {
      A1RowFixture r;
      r.constant = row.at("constant").get<std::string>();
      if (!row.at("printed").is_null()) {
        r.printed.emplace();
        for (const auto& v : row.at("printed")) r.printed->push_back(rational_of(v));
      }
      f.a1_table.push_back(std::move(r));
    }
    for (const auto& c : doc.at("curves")) {
      CurveFixture curve;
      curve.label = c.at("label").get<std::string>();
      curve.family = c.at("family").get<std::string>();
      curve.polynomial = c.at("polynomial").get<std::string>();
      curve.substitution = substitution_of(c.at("substitution"));
      if (!c.at("body_substitution").is_null()) curve.body_substitution = substitution_of(c.at("body_substitution"));
      curve.constant = c.at("constant").get<std::string>();
      curve.ratio = c.at("ratio").get<std::string>();
      f.curves.push_back(std::move(curve));
    }
    for (const auto& i : doc.at("identities")) {
      IdentityFixture id;
      id.name = i.at("name").get<std::string>();
      id.equation = i.at("equation").get<std::string>();
      id.against = i.value("against", "");
      id.against_equation = i.value("against_equation", "");
      if (i.contains("substitution")) id.substitution = substitution_of(i.at("substitution"));
      if (i.contains("shift")) id.shift = i.at("shift").get<std::string>().front();
      f.identities.push_back(std::move(id));
    }
    for (const auto& t : doc.at("quadrature").at("excluded")) f.quadrature_excluded.push_back(pair_of(t));
    for (const auto& t : doc.at("quadrature").at("eq317_hits")) f.eq317_hits.push_back(pair_of(t));
    for (const auto& t : doc.at("c6_solutions")) f.c6_solutions.emplace_back(integer_of(t.at(0)), quarter_of(t.at(1)));
    return f;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed fixtures: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed fixture value: ") + e.what());
  }
}

PaperFixtures load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixtures file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_fixtures(text.str());
}

std::string_view embedded_fixtures_json() { return detail::kPaperFixturesJson; }

namespace {

struct FixtureSlot {
  std::mutex lock;
  std::optional<PaperFixtures> replacement;
  bool read = false;
};

FixtureSlot& slot() {
  static FixtureSlot s;
  return s;
}

}  // namespace

void install_fixtures(PaperFixtures fixtures) {
  FixtureSlot& s = slot();
  std::lock_guard guard(s.lock);
  if (s.read) throw std::logic_error("fixtures already in use; install them before any computation");
  s.replacement = std::move(fixtures);
}

const PaperFixtures& paper_fixtures() {
  static const PaperFixtures fixtures = [] {
    FixtureSlot& s = slot();
    std::lock_guard guard(s.lock);
    s.read = true;
    return s.replacement ? std::move(*s.replacement) : parse_fixtures(detail::kPaperFixturesJson);
  }();
  return fixtures;
}

}  // namespace pascalpell
