#include "pascalpell/pascal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pascalpell {

std::string to_string(Quartile q) {
  switch (q) {
    case Quartile::median: return "median";
    case Quartile::q1: return "q1";
    case Quartile::q3: return "q3";
  }
  return "median";
}

namespace {
std::string lowered(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}
}  // namespace

Quartile parse_quartile(std::string_view text) {
  const std::string t = lowered(text);
  if (t == "median") return Quartile::median;
  if (t == "q1") return Quartile::q1;
  if (t == "q3") return Quartile::q3;
  throw std::invalid_argument("unknown quartile '" + std::string(text) + "' (expected median, q1 or q3)");
}

EquationFamily::EquationFamily(int k, Quartile quartile) : k_(k), quartile_(quartile) {
  if (k < 2 || k > 6) throw std::invalid_argument("family order k must be in 2..6, got " + std::to_string(k));
}

EquationFamily EquationFamily::parse(std::string_view text) {
  const std::string t = lowered(text);
  if (t.size() < 2 || t[0] != 'c' || !std::isdigit(static_cast<unsigned char>(t[1])))
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
  const int k = t[1] - '0';
  if (t.size() > 2 && std::isdigit(static_cast<unsigned char>(t[2])))
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
  Quartile q = Quartile::median;
  if (t.size() > 2) {
    if (t[2] != '-') throw std::invalid_argument("unknown family '" + std::string(text) + "'");
    q = parse_quartile(t.substr(3));
  }
  return EquationFamily(k, q);
}

Rational EquationFamily::weight() const {
  switch (quartile_) {
    case Quartile::median: return 2;
    case Quartile::q1: return 4;
    case Quartile::q3: return make_rational(4, 3);
  }
  return 2;
}

std::string EquationFamily::name() const {
  std::string out = "C" + std::to_string(k_);
  if (quartile_ == Quartile::q1) out += "-Q1";
  if (quartile_ == Quartile::q3) out += "-Q3";
  return out;
}

std::vector<EquationFamily> EquationFamily::all() {
  std::vector<EquationFamily> out;
  for (Quartile q : {Quartile::median, Quartile::q1, Quartile::q3})
    for (int k = 2; k <= 6; ++k) out.emplace_back(k, q);
  return out;
}

Rational binom(const Rational& x, unsigned k) {
  Rational num = 1;
  Integer fact = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= x - i;
    fact *= i + 1;
  }
  Rational out = num / fact;
  out.canonicalize();
  return out;
}

Polynomial binom_polynomial(const Polynomial& x, unsigned k) {
  Polynomial num(1);
  Integer fact = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= x - Polynomial(long(i));
    fact *= i + 1;
  }
  return num * Polynomial(make_rational(1, fact));
}

Rational n_side(const EquationFamily& f, const Integer& n) { return binom(Rational(n + f.k() - 1), f.k()); }

Rational m_side(const EquationFamily& f, const Rational& m) {
  const Rational top = m + (f.k() - 2);
  Rational out = f.weight() * binom(top, f.k()) + binom(top, f.k() - 1);
  out.canonicalize();
  return out;
}

Rational residual(const EquationFamily& f, const Integer& n, const QuarterInt& m) {
  Rational out = n_side(f, n) - m_side(f, m.value());
  out.canonicalize();
  return out;
}

Polynomial residual_polynomial(const EquationFamily& f) {
  const Polynomial n = Polynomial::variable(Var::n);
  const Polynomial m = Polynomial::variable(Var::m);
  const auto k = static_cast<unsigned>(f.k());
  const Polynomial top = m + Polynomial(long(k) - 2);
  return binom_polynomial(n + Polynomial(long(k) - 1), k) - Polynomial(f.weight()) * binom_polynomial(top, k) -
         binom_polynomial(top, k - 1);
}

Rational asym_binom(const Integer& n, unsigned k, const Rational& a) {
  if (n < 0 || Integer(k) > n) throw std::invalid_argument("asym_binom requires 0 <= k <= n");
  Rational out = binom(Rational(n), k);
  if (k > 0) out += a * binom(Rational(n - 1), k - 1);
  out.canonicalize();
  return out;
}

namespace {

constexpr unsigned kOutwardBits = 128;

Rational dyadic_floor(const Rational& x) {
  if (is_dyadic(x)) return x;
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), kOutwardBits);
  return make_rational(floor(x * scale), scale);
}

Rational dyadic_ceil(const Rational& x) {
  if (is_dyadic(x)) return x;
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), kOutwardBits);
  return make_rational(ceil(x * scale), scale);
}

}  // namespace

DyadicInterval asym_residual(int order, const Integer& n, const QuarterInt& m, const Rational& a,
                             const DyadicInterval& b) {
  const Rational mv = m.value();
  Rational fixed;
  Rational b_coeff;
  if (order == 2) {
    // C(n+1,2) + a n - 2 C(m,2) - m, minus b (2(m-1) + 1).
    fixed = binom(Rational(n + 1), 2) + a * n - 2 * binom(mv, 2) - mv;
    b_coeff = 2 * mv - 1;
  } else if (order == 3) {
    fixed = binom(Rational(n + 1), 3) + a * binom(Rational(n), 2) - 2 * binom(mv, 3) - binom(mv, 2);
    b_coeff = 2 * binom(mv - 1, 2) + (mv - 1);
  } else {
    throw std::invalid_argument("asymmetric residual order must be 2 or 3");
  }
  fixed.canonicalize();
  b_coeff.canonicalize();
  const DyadicInterval bterm = b.scaled(-b_coeff);
  return DyadicInterval(dyadic_floor(fixed) + bterm.lo(), dyadic_ceil(fixed) + bterm.hi());
}

IdentityVerdict check_identity(const Polynomial& lhs, const Polynomial& rhs, const Substitution& sub) {
  IdentityVerdict v;
  v.difference = lhs.substitute(sub) - rhs.substitute(sub);
  v.equal = v.difference.is_zero();
  return v;
}

ProportionalityVerdict check_proportional(const Polynomial& lhs, const Polynomial& rhs, const Substitution& sub) {
  const Polynomial l = lhs.substitute(sub);
  const Polynomial r = rhs.substitute(sub);
  ProportionalityVerdict v;
  if (r.is_zero()) {
    v.factor = 1;
    v.difference = l;
    v.equal = l.is_zero();
    return v;
  }
  const auto& [mono, coeff] = r.leading_term();
  v.factor = l.coefficient(mono) / coeff;
  v.factor.canonicalize();
  v.difference = l - Polynomial(v.factor) * r;
  v.equal = v.factor != 0 && v.difference.is_zero();
  return v;
}

}  // namespace pascalpell
