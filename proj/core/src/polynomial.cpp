#include "pascalpell/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace pascalpell {

namespace {
constexpr std::string_view kVarNames = "xynmkuvwij";
}

char var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(char c) {
  const auto pos = kVarNames.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Var>(pos);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Var v) {
  Monomial mono;
  mono.exps[static_cast<std::size_t>(v)] = 1;
  return monomial(mono, 1);
}

Polynomial Polynomial::monomial(const Monomial& mono, const Rational& coeff) {
  Polynomial p;
  p.add_term(mono, coeff);
  return p;
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

bool Polynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

unsigned Polynomial::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.exponent(v));
  return d;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const Var v = static_cast<Var>(i);
    if (degree_in(v) > 0) out.push_back(v);
  }
  return out;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.begin();
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

Integer Polynomial::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [mono, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial mono;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        const unsigned e = unsigned(ma.exps[i]) + mb.exps[i];
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        mono.exps[i] = static_cast<std::uint8_t>(e);
      }
      out.add_term(mono, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator-(const Polynomial& a) {
  Polynomial out;
  for (const auto& [mono, c] : a.terms_) out.terms_.emplace(mono, -c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const Substitution& sub) const {
  Polynomial out;
  // Cache powers of each substituted polynomial.
  std::map<std::pair<Var, unsigned>, Polynomial> powers;
  auto power_of = [&](Var v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, sub.at(v).pow(e)).first;
    return it->second;
  };
  for (const auto& [mono, c] : terms_) {
    Monomial kept;
    Polynomial factor(c);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const Var v = static_cast<Var>(i);
      const unsigned e = mono.exps[i];
      if (e == 0) continue;
      if (sub.contains(v)) {
        factor *= power_of(v, e);
      } else {
        kept.exps[i] = static_cast<std::uint8_t>(e);
      }
    }
    out += factor * monomial(kept, 1);
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<Var, Rational>& point) const {
  Rational total = 0;
  for (const auto& [mono, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const unsigned e = mono.exps[i];
      if (e == 0) continue;
      const auto it = point.find(static_cast<Var>(i));
      if (it == point.end())
        throw std::invalid_argument(std::string("no value for variable ") + kVarNames[i]);
      for (unsigned r = 0; r < e; ++r) t *= it->second;
    }
    total += t;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational mag = c;
    const bool negative = mag < 0;
    if (negative) mag = -mag;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (mono.exps[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += kVarNames[i];
      if (mono.exps[i] > 1) vars += "^" + std::to_string(mono.exps[i]);
    }
    if (vars.empty()) {
      out += pascalpell::to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += pascalpell::to_string(mag) + "*" + vars;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || var_from_name(c).has_value();
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Polynomial(Rational(1) / d.terms().begin()->second);
      } else if (starts_factor(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(Rational(parse_integer(text_.substr(start, pos_ - start))));
    }
    if (auto v = var_from_name(c)) {
      ++pos_;
      return Polynomial::variable(*v);
    }
    fail("expected a number, variable or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse_all(); }

AffineSub::AffineSub(std::vector<AffineMap> maps) : maps_(std::move(maps)) {
  std::set<Var> seen;
  for (auto& m : maps_) {
    m.scale.canonicalize();
    m.offset.canonicalize();
    if (m.scale == 0) throw std::invalid_argument("affine substitution with zero scale");
    if (!seen.insert(m.target).second) throw std::invalid_argument("affine substitution repeats a target");
  }
}

const AffineMap* AffineSub::find(Var target) const {
  for (const auto& m : maps_) {
    if (m.target == target) return &m;
  }
  return nullptr;
}

Substitution AffineSub::as_substitution() const {
  Substitution sub;
  for (const auto& m : maps_) sub.emplace(m.target, Polynomial(m.scale) * Polynomial::variable(m.source) + Polynomial(m.offset));
  return sub;
}

Rational AffineSub::forward(Var target, const Rational& source_value) const {
  const AffineMap* m = find(target);
  if (m == nullptr) throw std::invalid_argument(std::string("no affine map for ") + var_name(target));
  return m->scale * source_value + m->offset;
}

Rational AffineSub::inverse(Var target, const Rational& target_value) const {
  const AffineMap* m = find(target);
  if (m == nullptr) throw std::invalid_argument(std::string("no affine map for ") + var_name(target));
  return (target_value - m->offset) / m->scale;
}

AffineSub AffineSub::shifted(const std::map<Var, Rational>& offsets) const {
  std::vector<AffineMap> maps = maps_;
  for (auto& m : maps) {
    if (auto it = offsets.find(m.target); it != offsets.end()) m.offset += it->second;
  }
  return AffineSub(std::move(maps));
}

std::string AffineSub::to_string() const {
  std::string out;
  for (const auto& m : maps_) {
    if (!out.empty()) out += ", ";
    out += var_name(m.target);
    out += "=";
    out += (Polynomial(m.scale) * Polynomial::variable(m.source) + Polynomial(m.offset)).to_string();
  }
  return out;
}

}  // namespace pascalpell
