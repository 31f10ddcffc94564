#include "pascalpell/sieve.hpp"

#include <stdexcept>

#include "pascalpell/pascal.hpp"

namespace pascalpell {

namespace {

std::uint32_t reduce(const Integer& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

std::pair<Var, Var> default_vars(const Polynomial& curve) {
  const auto vars = curve.variables();
  if (vars.size() > 2) throw std::invalid_argument("residue tables need a curve in at most two variables");
  if (vars.size() == 2) return {vars[0], vars[1]};
  if (vars.size() == 1) return {vars[0], vars[0] == Var::y ? Var::x : Var::y};
  return {Var::x, Var::y};
}

struct ModTerm {
  std::uint64_t coeff;
  unsigned ea;
  unsigned eb;
};

std::vector<ModTerm> mod_terms(const Polynomial& integral, Var first, Var second, std::uint32_t p) {
  std::vector<ModTerm> out;
  for (const auto& [mono, c] : integral.terms()) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const Var v = static_cast<Var>(i);
      if (mono.exps[i] != 0 && v != first && v != second)
        throw std::invalid_argument(std::string("curve variable ") + var_name(v) + " is not a table variable");
    }
    out.push_back({reduce(c.get_num(), p), mono.exponent(first), mono.exponent(second)});
  }
  return out;
}

std::uint32_t eval_terms(const std::vector<ModTerm>& terms, std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  std::uint64_t total = 0;
  for (const auto& t : terms) {
    std::uint64_t v = t.coeff;
    for (unsigned i = 0; i < t.ea; ++i) v = v * a % p;
    for (unsigned i = 0; i < t.eb; ++i) v = v * b % p;
    total = (total + v) % p;
  }
  return static_cast<std::uint32_t>(total);
}

Polynomial cleared(const Polynomial& curve) { return curve * Polynomial(Rational(curve.denominator_lcm())); }

}  // namespace

ResidueTable::ResidueTable(const Polynomial& curve, std::uint32_t modulus)
    : ResidueTable(curve, modulus, default_vars(curve).first, default_vars(curve).second) {}

ResidueTable::ResidueTable(const Polynomial& curve, std::uint32_t modulus, Var first, Var second)
    : curve_(curve), integral_(cleared(curve)), modulus_(modulus), first_(first), second_(second) {
  if (modulus < 2 || modulus > kMaxModulus)
    throw std::invalid_argument("modulus must be in 2.." + std::to_string(kMaxModulus) + ", got " +
                                std::to_string(modulus));
  if (first == second) throw std::invalid_argument("residue table variables must differ");
  build();
}

void ResidueTable::build() {
  const auto terms = mod_terms(integral_, first_, second_, modulus_);
  const std::size_t cells = std::size_t(modulus_) * modulus_;
  bits_.assign((cells + 63) / 64, 0);
  row_count_.assign(modulus_, 0);
  count_ = 0;
  for (std::uint32_t a = 0; a < modulus_; ++a) {
    for (std::uint32_t b = 0; b < modulus_; ++b) {
      if (eval_terms(terms, a, b, modulus_) != 0) continue;
      const std::size_t i = std::size_t(a) * modulus_ + b;
      bits_[i >> 6] |= std::uint64_t{1} << (i & 63U);
      ++row_count_[a];
      ++count_;
    }
  }
}

bool ResidueTable::admits(const Integer& a, const Integer& b) const {
  return admits(reduce(a, modulus_), reduce(b, modulus_));
}

Rational ResidueTable::fraction() const {
  return make_rational(Integer(static_cast<unsigned long>(count_)),
                       Integer(static_cast<unsigned long>(modulus_)) * modulus_);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ResidueTable::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t a = 0; a < modulus_; ++a)
    for (std::uint32_t b = 0; b < modulus_; ++b)
      if (admits(a, b)) out.emplace_back(a, b);
  return out;
}

ResidueTable admissible_table(const Polynomial& curve, std::uint32_t modulus) { return ResidueTable(curve, modulus); }

Rational prune_fraction(const ResidueTable& t) { return 1 - t.fraction(); }

std::optional<std::uint32_t> prove_empty(const Polynomial& curve, const std::vector<std::uint32_t>& moduli) {
  for (auto p : moduli)
    if (ResidueTable(curve, p).admissible_count() == 0) return p;
  return std::nullopt;
}

std::vector<std::uint32_t> certifying_moduli(const Polynomial& curve, const std::vector<std::uint32_t>& moduli) {
  std::vector<std::uint32_t> out;
  for (auto p : moduli)
    if (ResidueTable(curve, p).admissible_count() == 0) out.push_back(p);
  return out;
}

std::uint32_t evaluate_mod(const Polynomial& curve, Var first, Var second, const Integer& a, const Integer& b,
                           std::uint32_t modulus) {
  const Rational v = cleared(curve).evaluate({{first, Rational(a)}, {second, Rational(b)}});
  return reduce(v.get_num(), modulus);
}

Polynomial eq314_curve() { return Polynomial::parse("u^2 - 2(2w-1)^2 - 8"); }

Polynomial curve_by_name(const std::string& name_or_expression) {
  if (name_or_expression == "eq314") return eq314_curve();
  for (const auto& c : curve_table())
    if (c.label == name_or_expression) return c.polynomial;
  return Polynomial::parse(name_or_expression);
}

}  // namespace pascalpell
