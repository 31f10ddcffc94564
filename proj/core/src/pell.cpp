#include "pascalpell/pell.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pascalpell/fixtures.hpp"

namespace pascalpell {

PellProblem::PellProblem(Integer D, Integer c, std::optional<Congruence> y_condition)
    : D_(std::move(D)), c_(std::move(c)), y_condition_(std::move(y_condition)) {
  if (D_ <= 0) throw std::invalid_argument("Pell problem needs D > 0");
  if (as_perfect_square(D_)) throw std::invalid_argument("Pell problem needs a nonsquare D, got " + to_string(D_));
  if (c_ == 0) throw std::invalid_argument("Pell problem needs c != 0");
  if (y_condition_ && y_condition_->modulus < 1) throw std::invalid_argument("congruence modulus must be positive");
}

bool PellProblem::admits_y(const Integer& y) const {
  if (!y_condition_) return true;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), Integer(y - y_condition_->residue).get_mpz_t(), y_condition_->modulus.get_mpz_t());
  return r == 0;
}

SqrtCF sqrt_cf(const Integer& D) {
  if (D <= 0) throw std::invalid_argument("sqrt_cf needs D > 0");
  if (as_perfect_square(D)) throw std::invalid_argument("sqrt_cf: " + to_string(D) + " is a perfect square");
  SqrtCF cf;
  cf.a0 = isqrt(D);
  Integer P = 0;
  Integer Q = 1;
  Integer a = cf.a0;
  std::optional<IntPair> first;
  for (;;) {
    P = a * Q - P;
    Q = (D - P * P) / Q;
    a = (cf.a0 + P) / Q;
    IntPair state{P, Q};
    if (first && state == *first) break;
    if (!first) first = state;
    cf.period.push_back(a);
  }
  return cf;
}

const Integer& sqrt_cf_term(const SqrtCF& cf, std::size_t i) {
  if (i == 0) return cf.a0;
  return cf.period[(i - 1) % cf.period.size()];
}

PellFundamental fundamental_unit(const Integer& D) {
  const SqrtCF cf = sqrt_cf(D);
  PellFundamental out;
  Integer p_prev = 1, q_prev = 0;
  Integer p = cf.a0, q = 1;
  for (std::size_t i = 1;; ++i) {
    const Integer norm = p * p - D * q * q;
    if (norm == -1 && !out.negative) out.negative = IntPair{p, q};
    if (norm == 1) {
      out.unit = {p, q};
      return out;
    }
    const Integer& a = sqrt_cf_term(cf, i);
    Integer np = a * p + p_prev;
    Integer nq = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(np);
    q = std::move(nq);
  }
}

IntPair unit_multiply(const Integer& D, const IntPair& p, const IntPair& unit) {
  return {unit.first * p.first + D * unit.second * p.second, unit.first * p.second + unit.second * p.first};
}

IntPair class_representative(const Integer& D, IntPair p, const IntPair& unit) {
  p.first = abs(p.first);
  p.second = abs(p.second);
  const IntPair inverse{unit.first, -unit.second};
  for (;;) {
    IntPair q = unit_multiply(D, p, inverse);
    q.first = abs(q.first);
    q.second = abs(q.second);
    if (q.second < p.second || (q.second == p.second && q.first < p.first)) {
      p = std::move(q);
    } else {
      break;
    }
  }
  if (p.second == 0) p = unit_multiply(D, p, unit);
  return p;
}

std::vector<PellClassSeq> class_sequences(const PellProblem& p, const Integer& seed_bound) {
  if (seed_bound < 1) throw std::invalid_argument("seed bound must be at least 1");
  const IntPair unit = fundamental_unit(p.D()).unit;
  std::map<IntPair, IntPair> classes;  // representative -> seed
  for (Integer y = 0; y <= seed_bound; ++y) {
    if (!p.admits_y(y)) continue;
    const Integer t = p.c() + p.D() * y * y;
    if (t < 0) continue;
    auto x = as_perfect_square(t);
    if (!x) continue;
    const IntPair rep = class_representative(p.D(), {*x, y}, unit);
    auto it = classes.find(rep);
    if (it == classes.end()) {
      classes.emplace(rep, p.admits_y(rep.second) ? rep : IntPair{*x, y});
    }
  }
  std::vector<PellClassSeq> out;
  for (const auto& [rep, seed] : classes) out.push_back({p, seed, unit});
  return out;
}

std::vector<IntPair> generate(const PellClassSeq& s, std::size_t count) {
  std::vector<IntPair> out;
  out.reserve(count);
  IntPair cur = s.seed;
  for (std::size_t i = 0; i < count; ++i) {
    if (!s.problem.satisfies(cur.first, cur.second))
      throw std::logic_error("generated term (" + to_string(cur.first) + "," + to_string(cur.second) +
                             ") does not satisfy the equation");
    out.push_back(cur);
    cur = unit_multiply(s.problem.D(), cur, s.unit);
  }
  return out;
}

std::string sequence_json_lines(const PellClassSeq& s, std::size_t count) {
  std::string out;
  const auto terms = generate(s, count);
  for (std::size_t a = 0; a < terms.size(); ++a) {
    nlohmann::ordered_json line;
    line["D"] = to_string(s.problem.D());
    line["c"] = to_string(s.problem.c());
    line["seed"] = {to_string(s.seed.first), to_string(s.seed.second)};
    line["alpha"] = a;
    line["x"] = to_string(terms[a].first);
    line["y"] = to_string(terms[a].second);
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::size_t PaperSequenceReport::matched() const {
  return static_cast<std::size_t>(std::count_if(tuples.begin(), tuples.end(), [](const auto& t) { return t.match; }));
}

namespace {

const IntPair kBigUnit{577, 204};

PellProblem prop32_problem() { return PellProblem(8, 8, Congruence{1, 2}); }

std::string tuple_text(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

std::vector<PellClassSeq> prop32_orbits() {
  std::vector<PellClassSeq> out;
  for (const auto& o : paper_fixtures().prop32_orbits) out.push_back({prop32_problem(), o.seed, kBigUnit});
  return out;
}

PellClassSeq small_solution_orbit() { return {prop32_problem(), {4, 1}, {3, 1}}; }

PellClassSeq q3_class() { return {PellProblem(3, -2), {1, 1}, {2, 1}}; }

PellClassSeq c2_class() { return {PellProblem(8, 1), {3, 1}, {3, 1}}; }

PaperSequenceReport verify_paper_sequences() {
  const PaperFixtures& fx = paper_fixtures();
  PaperSequenceReport report;
  auto add = [&](std::string seq, std::size_t i, std::string printed, std::string computed) {
    const bool match = printed == computed;
    report.tuples.push_back({std::move(seq), i, std::move(printed), std::move(computed), match});
  };

  // (x, y) = (2n + 1, m), term 0 is (n, m) = (1, 1).
  const auto c2 = generate(c2_class(), fx.c2_median.m.size());
  for (std::size_t i = 0; i < fx.c2_median.m.size(); ++i) {
    const Integer n = (c2[i].first - 1) / 2;
    add("(2.1)", i, tuple_text(fx.c2_median.m[i].to_string(), to_string(fx.c2_median.n[i])),
        tuple_text(to_string(c2[i].second), to_string(n)));
  }

  // (Y, X) = (4m + 1, 2n + 1); terms 0 and 1 are the trivial (0, 0) and (1, 1).
  const auto q3 = generate(q3_class(), fx.c2_q3.m.size() + 2);
  for (std::size_t i = 0; i < fx.c2_q3.m.size(); ++i) {
    const auto& [Y, X] = q3[i + 2];
    const QuarterInt m = QuarterInt::from_quarters(Y - 1);
    const Integer n = (X - 1) / 2;
    add("(2.4)", i, tuple_text(fx.c2_q3.m[i].to_string(), to_string(fx.c2_q3.n[i])),
        tuple_text(m.to_string(), to_string(n)));
  }

  // Each printed list starts with the two small solutions, then terms 1 and 2 of its orbit.
  const auto small = generate(small_solution_orbit(), 2);
  const auto orbits = prop32_orbits();
  for (std::size_t s = 0; s < fx.prop32_orbits.size(); ++s) {
    const auto& printed = fx.prop32_orbits[s];
    const auto terms = generate(orbits[s], printed.tuples.size() - 1);
    for (std::size_t i = 0; i < printed.tuples.size(); ++i) {
      const IntPair& uv = i < 2 ? small[i] : terms[i - 1];
      const Integer j = (uv.second + 1) / 2;
      add(printed.name, i, tuple_text(to_string(printed.tuples[i].first), to_string(printed.tuples[i].second)),
          tuple_text(to_string(uv.first), to_string(j)));
    }
  }
  return report;
}

}  // namespace pascalpell
