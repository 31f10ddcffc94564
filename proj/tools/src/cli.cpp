#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "pascalpell/fixtures.hpp"
#include "report_json.hpp"
#include "reproduce.hpp"

namespace pascalpell::cli {

namespace {

/// A bad flag value detected after parsing.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Integer pow10(unsigned e) {
  Integer out = 1;
  for (unsigned i = 0; i < e; ++i) out *= 10;
  return out;
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

unsigned parse_precision(const std::string& text) {
  static const std::regex digits(R"(\d{1,6})");
  if (!std::regex_match(text, digits)) throw ConfigError("precision must be a positive bit count, got '" + text + "'");
  const unsigned bits = static_cast<unsigned>(std::stoul(text));
  if (bits < 8 || bits > 65536) throw ConfigError("precision must be in 8..65536 bits, got " + text);
  return bits;
}

IntPair parse_pair(const std::string& text) {
  static const std::regex pair(R"(\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pair)) throw ConfigError("expected a pair 'x,y', got '" + text + "'");
  return {parse_integer(m[1].str()), parse_integer(m[2].str())};
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw ConfigError("format '" + format + "' not available here (choose " + list + ")");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// Family from --family, or from --k and --quartile.
struct FamilyFlags {
  std::string family;
  int k = 0;
  std::string quartile = "median";

  void add_to(CLI::App* app) {
    app->add_option("--family", family, "Family name, e.g. C4, C2-Q3");
    app->add_option("--k", k, "Column order 2..6");
    app->add_option("--quartile", quartile, "median, q1 or q3")->capture_default_str();
  }

  EquationFamily resolve() const {
    if (!family.empty()) {
      if (k != 0) throw ConfigError("give either --family or --k, not both");
      return EquationFamily::parse(family);
    }
    if (k == 0) throw ConfigError("a family is required (--k or --family)");
    return EquationFamily(k, parse_quartile(quartile));
  }
};

}  // namespace

Integer parse_bound(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t");
  const std::string text = first == std::string::npos ? "" : raw.substr(first, raw.find_last_not_of(" \t") - first + 1);
  static const std::regex plain(R"(\d+)");
  static const std::regex sci(R"((\d+)[eE](\d{1,3}))");
  static const std::regex power(R"((?:(\d+)\s*[*x·]\s*)?10\^(\d{1,3}))");
  std::smatch m;
  if (std::regex_match(text, plain)) return parse_integer(text);
  if (std::regex_match(text, m, sci)) return parse_integer(m[1].str()) * pow10(std::stoul(m[2].str()));
  if (std::regex_match(text, m, power)) {
    const Integer head = m[1].matched ? parse_integer(m[1].str()) : Integer(1);
    return head * pow10(std::stoul(m[2].str()));
  }
  throw std::invalid_argument("cannot read bound '" + text + "' (use 1000000, 1e6 or 10^6)");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact search and verification for median and quartile equations of Pascal's triangle columns",
               "pascalpell"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string fixtures_path;
  app.add_option("--fixtures", fixtures_path, "Read printed reference values from this JSON file")
      ->check(CLI::ExistingFile);

  std::function<void()> action;
  auto on = [&](CLI::App* sub, std::function<void()> f) { sub->callback([&action, f] { action = f; }); };

  // search
  auto* search = app.add_subcommand("search", "Sieved exhaustive search for exact solutions");
  FamilyFlags search_family;
  search_family.add_to(search);
  std::string bound_text, domain_text = "quarters", moduli_text = "auto", search_format = "json";
  unsigned workers = 1;
  std::uint64_t chunk = 0;
  bool allow_large = false, no_timing = false;
  search->add_option("--bound,-N", bound_text, "Largest n scanned (default 10^6 or $PASCALPELL_BOUND)");
  search->add_option("--domain", domain_text, "integers, halves or quarters")->capture_default_str();
  search->add_option("--moduli", moduli_text, "Sieve moduli: auto, none, or a list like 7,11,13")->capture_default_str();
  search->add_option("--workers,-j", workers, "Worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
  search->add_option("--chunk", chunk, "Range size per work unit (0 = automatic)");
  search->add_flag("--allow-large", allow_large, "Permit bounds above 10^8");
  search->add_flag("--no-timing", no_timing, "Omit the seconds field");
  search->add_option("--format", search_format, "json or text")->capture_default_str();
  on(search, [&] {
    check_format(search_format, {"json", "text"});
    const EquationFamily f = search_family.resolve();
    const Integer N = bound_text.empty() ? (env("PASCALPELL_BOUND") ? parse_bound(*env("PASCALPELL_BOUND"))
                                                                    : Integer(kDefaultBound))
                                         : parse_bound(bound_text);
    if (N < 2) throw ConfigError("bound must be at least 2");
    if (N > kDeskBound && !allow_large) throw ConfigError("bounds above 10^8 need --allow-large");
    const MedianDomain d = parse_domain(domain_text);
    std::vector<SieveBinding> sieves;
    if (moduli_text == "auto") {
      sieves = default_sieves(f);
    } else if (moduli_text != "none") {
      std::vector<std::uint32_t> mods;
      for (const auto& part : CLI::detail::split(moduli_text, ',')) {
        static const std::regex digits(R"(\d{1,9})");
        if (!std::regex_match(part, digits)) throw ConfigError("bad modulus '" + part + "'");
        mods.push_back(static_cast<std::uint32_t>(std::stoul(part)));
      }
      sieves = sieves_for(f, mods);
      if (sieves.empty() && !mods.empty()) throw ConfigError(f.name() + " has no plane curve to sieve with");
    }
    const SearchReport r = exhaustive(f, N, d, sieves, {workers, chunk, 0.01});
    if (search_format == "json") {
      emit(out, search_json(r, !no_timing));
      return;
    }
    out << r.family.name() << " N=" << to_string(r.N) << " domain=" << to_string(r.domain) << '\n';
    for (const auto& s : r.solutions) out << "solution " << to_string(s.n) << ' ' << s.m.to_string() << '\n';
    for (const auto& s : r.trivial_excluded) out << "trivial " << to_string(s.n) << ' ' << s.m.to_string() << '\n';
    out << "tested " << r.tested << " pruned " << r.pruned << '\n';
  });

  // pell
  auto* pell = app.add_subcommand("pell", "Pell equations: units, classes, sequences, printed lists");
  pell->require_subcommand(1);
  std::string D_text, c_text, seed_text, unit_text, sequence_name;
  std::string y_residue, y_modulus;
  long seed_bound = 1000;
  std::size_t count = 10;

  auto* unit = pell->add_subcommand("unit", "Fundamental unit of x^2 - D y^2 = 1");
  unit->add_option("--D", D_text, "Nonsquare D > 0")->required();
  on(unit, [&] { emit(out, unit_json(parse_integer(D_text))); });

  auto* classes = pell->add_subcommand("classes", "One seed per class of x^2 - D y^2 = c");
  classes->add_option("--D", D_text)->required();
  classes->add_option("--c", c_text)->required();
  classes->add_option("--seed-bound", seed_bound, "Largest seed y tried")->capture_default_str();
  classes->add_option("--y-residue", y_residue, "Keep y ≡ residue (mod --y-modulus)");
  classes->add_option("--y-modulus", y_modulus);
  on(classes, [&] {
    std::optional<Congruence> cond;
    if (y_residue.empty() != y_modulus.empty()) throw ConfigError("--y-residue and --y-modulus go together");
    if (!y_residue.empty()) cond = Congruence{parse_integer(y_residue), parse_integer(y_modulus)};
    const PellProblem p(parse_integer(D_text), parse_integer(c_text), cond);
    emit(out, classes_json(p, class_sequences(p, Integer(seed_bound))));
  });

  auto* gen = pell->add_subcommand("generate", "Terms of a fundamental sequence, one JSON object per line");
  gen->add_option("--D", D_text);
  gen->add_option("--c", c_text);
  gen->add_option("--seed", seed_text, "Seed pair x,y");
  gen->add_option("--unit", unit_text, "Unit pair (default: the fundamental unit)");
  gen->add_option("--sequence", sequence_name, "Named sequence: median, q3, small, or a printed orbit name");
  gen->add_option("--count", count, "Number of terms")->capture_default_str();
  on(gen, [&] {
    if (count == 0) throw ConfigError("--count must be at least 1");
    std::optional<PellClassSeq> seq;
    if (!sequence_name.empty()) {
      if (sequence_name == "median") seq = c2_class();
      if (sequence_name == "q3") seq = q3_class();
      if (sequence_name == "small") seq = small_solution_orbit();
      const auto& orbits = paper_fixtures().prop32_orbits;
      for (std::size_t i = 0; i < orbits.size(); ++i)
        if (orbits[i].name == sequence_name) seq = prop32_orbits()[i];
      if (!seq) throw ConfigError("unknown sequence '" + sequence_name + "'");
    } else {
      if (D_text.empty() || c_text.empty() || seed_text.empty())
        throw ConfigError("generate needs --sequence, or --D, --c and --seed");
      const PellProblem p(parse_integer(D_text), parse_integer(c_text));
      const IntPair seed = parse_pair(seed_text);
      if (!p.satisfies(seed.first, seed.second)) throw ConfigError("seed is not a solution");
      const IntPair u = unit_text.empty() ? fundamental_unit(p.D()).unit : parse_pair(unit_text);
      if (u.first * u.first - p.D() * u.second * u.second != 1) throw ConfigError("unit does not have norm 1");
      seq = PellClassSeq{p, seed, u};
    }
    out << sequence_json_lines(*seq, count);
  });

  auto* verify = pell->add_subcommand("verify-paper", "Regenerate every printed sequence tuple");
  on(verify, [&] { emit(out, paper_sequences_json(verify_paper_sequences())); });

  // cf
  auto* cf = app.add_subcommand("cf", "Certified continued fractions of radicals");
  cf->require_subcommand(1);
  std::string constant, precision_text, a1_format = "csv";
  std::size_t terms = 12;
  auto precision = [&] {
    if (!precision_text.empty()) return parse_precision(precision_text);
    if (auto e = env("PASCALPELL_PRECISION")) return parse_precision(*e);
    return kDefaultPrecision;
  };
  auto* expand_cmd = cf->add_subcommand("expand", "Partial quotients");
  auto* conv_cmd = cf->add_subcommand("convergents", "Convergents with the |x - p/q| < 1/q^2 check");
  for (auto* sub : {expand_cmd, conv_cmd}) {
    sub->add_option("--constant", constant, "e.g. 2^(2/3), (4/3)^(1/6), sqrt(3)")->required();
    sub->add_option("--terms", terms)->capture_default_str();
    sub->add_option("--precision", precision_text, "Starting precision in bits (default 128 or $PASCALPELL_PRECISION)");
  }
  auto expansion = [&] {
    if (terms == 0) throw ConfigError("--terms must be at least 1");
    return expand(AlgebraicRoot::parse(constant), terms, precision());
  };
  on(expand_cmd, [&] { emit(out, expansion_json(expansion())); });
  on(conv_cmd, [&] { emit(out, convergents_json(expansion())); });
  auto* a1 = cf->add_subcommand("a1-table", "The approximation table with printed entries compared");
  a1->add_option("--terms", terms)->capture_default_str();
  a1->add_option("--format", a1_format, "csv or json")->capture_default_str();
  on(a1, [&] {
    check_format(a1_format, {"csv", "json"});
    const auto rows = a1_table(terms);
    if (a1_format == "csv") {
      out << a1_table_csv(rows);
    } else {
      emit(out, a1_json(rows));
    }
  });

  // sieve
  auto* sieve = app.add_subcommand("sieve", "Residue tables of plane curves");
  sieve->require_subcommand(1);
  std::string curve_text;
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> moduli;
  bool with_pairs = false;
  auto* table = sieve->add_subcommand("table", "Admissible residue pairs");
  table->add_option("--curve", curve_text, "eq314, a curve label (P_6, Q_2, ...) or a polynomial")->required();
  table->add_option("--modulus", modulus)->required();
  table->add_flag("--pairs", with_pairs, "List the admissible pairs");
  on(table, [&] { emit(out, table_json(curve_text, admissible_table(curve_by_name(curve_text), modulus), with_pairs)); });
  auto* prune = sieve->add_subcommand("prune", "Share of residue pairs eliminated");
  prune->add_option("--curve", curve_text)->required();
  prune->add_option("--moduli", moduli)->delimiter(',')->required();
  on(prune, [&] {
    const Polynomial p = curve_by_name(curve_text);
    std::vector<ResidueTable> tables;
    for (auto m : moduli) tables.push_back(admissible_table(p, m));
    emit(out, prune_json(curve_text, tables));
  });
  auto* prove = sieve->add_subcommand("prove-empty", "Find a modulus with no admissible pair");
  prove->add_option("--curve", curve_text)->required();
  prove->add_option("--moduli", moduli, "default 3,4,5,7,8")->delimiter(',');
  on(prove, [&] {
    if (moduli.empty()) moduli = {3, 4, 5, 7, 8};
    for (auto m : moduli)
      if (m < 2 || m > ResidueTable::kMaxModulus) throw ConfigError("modulus out of range: " + std::to_string(m));
    emit(out, prove_empty_json(curve_text, curve_by_name(curve_text), moduli));
  });

  // quasi
  auto* quasi = app.add_subcommand("quasi", "Quasi-solutions from convergents and their residual orders");
  FamilyFlags quasi_family;
  quasi_family.add_to(quasi);
  std::string list_name = "default", quasi_format = "json";
  std::size_t quasi_count = 15;
  quasi->add_option("--count", quasi_count, "Number of quasi-solutions")->capture_default_str();
  quasi->add_option("--list", list_name, "default, c3-integer or c3-half")->capture_default_str();
  quasi->add_option("--precision", precision_text, "Starting precision in bits");
  quasi->add_option("--format", quasi_format, "json or csv")->capture_default_str();
  on(quasi, [&] {
    check_format(quasi_format, {"json", "csv"});
    if (quasi_count == 0) throw ConfigError("--count must be at least 1");
    std::optional<EquationFamily> f;
    std::optional<QuasiSpec> spec;
    if (list_name == "c3-integer" || list_name == "c3-half") {
      f = EquationFamily(3, Quartile::median);
      spec = list_name == "c3-integer" ? c3_integer_list_spec() : c3_half_list_spec();
    } else if (list_name == "default") {
      f = quasi_family.resolve();
      spec = default_quasi_spec(*f);
    } else {
      throw ConfigError("unknown list '" + list_name + "'");
    }
    const auto rows = quasi_generate(*f, *spec, quasi_count, precision());
    if (quasi_format == "csv") {
      out << quasi_csv(rows);
    } else {
      emit(out, quasi_json(*f, *spec, rows));
    }
  });

  // identities, curves
  auto* ident = app.add_subcommand("identities", "Check every printed change of variables; errata report");
  std::string ident_format = "json";
  ident->add_option("--format", ident_format, "json or text")->capture_default_str();
  on(ident, [&] {
    check_format(ident_format, {"json", "text"});
    const auto checks = identity_suite();
    if (ident_format == "json") {
      emit(out, identities_json(checks));
      return;
    }
    for (const auto& c : checks) {
      out << (c.equal ? "ok     " : "ERRATA ") << c.name << " vs " << c.against << ": " << c.note << '\n';
      if (!c.equal) out << "       difference: " << c.difference.to_string() << '\n';
    }
  });
  auto* curves = app.add_subcommand("curves", "The plane-curve table with verified substitutions");
  std::string curves_format = "csv";
  curves->add_option("--format", curves_format, "csv or json")->capture_default_str();
  on(curves, [&] {
    check_format(curves_format, {"csv", "json"});
    if (curves_format == "csv") {
      out << curve_table_csv();
    } else {
      emit(out, curves_json());
    }
  });

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Run the full reproduction suite");
  unsigned repro_workers = 1;
  repro->add_option("--workers,-j", repro_workers)->check(CLI::Range(1U, 256U))->capture_default_str();
  on(repro, [&] { emit(out, reproduce({repro_workers, 50})); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pascalpell: " << e.what() << '\n';
    return kBadConfig;
  }

  try {
    if (!fixtures_path.empty()) install_fixtures(load_fixtures(fixtures_path));
    action();
  } catch (const std::logic_error& e) {
    // Bad values surface as invalid_argument, domain_error or out_of_range; any other
    // logic_error is a failed internal check.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      err << "pascalpell: " << e.what() << '\n';
      return kBadConfig;
    }
    err << "pascalpell: internal check failed: " << e.what() << '\n';
    return kInternal;
  } catch (const std::runtime_error& e) {
    err << "pascalpell: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    err << "pascalpell: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace pascalpell::cli
