#include "pascalpell/exactnum.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace pascalpell {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const std::size_t start = (!digits.empty() && digits.front() == '-') ? 1 : 0;
  if (digits.size() == start) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw std::invalid_argument("bad integer literal: " + std::string(text));
  }
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::size_t bit_length(const Integer& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

QuarterInt QuarterInt::from_quarters(Integer quarters) {
  QuarterInt q;
  q.quarters_ = std::move(quarters);
  return q;
}

std::optional<QuarterInt> QuarterInt::from_rational(const Rational& value) {
  const Integer& den = value.get_den();
  if (den != 1 && den != 2 && den != 4) return std::nullopt;
  return from_quarters(value.get_num() * (4 / den));
}

bool QuarterInt::is_integer() const { return mpz_divisible_ui_p(quarters_.get_mpz_t(), 4) != 0; }

bool QuarterInt::is_half() const {
  return mpz_divisible_ui_p(quarters_.get_mpz_t(), 2) != 0 && !is_integer();
}

std::string QuarterInt::to_string() const { return pascalpell::to_string(value()); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer ikth_root(const Integer& n, unsigned long k) {
  if (k == 0) throw std::domain_error("zeroth root");
  if (n < 0) {
    if (k % 2 == 0) throw std::domain_error("even root of a negative integer");
    // floor of a negative real root is -ceil(|n|^(1/k)).
    Integer m = -n;
    Integer r;
    const bool exact = mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0;
    return exact ? Integer(-r) : Integer(-r - 1);
  }
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

namespace {

// Quadratic residue tables: x is a square mod p only if table[x mod p] is set.
template <std::size_t P>
constexpr std::array<bool, P> residue_table() {
  std::array<bool, P> t{};
  for (std::size_t i = 0; i < P; ++i) t[(i * i) % P] = true;
  return t;
}

constexpr auto kSquares64 = residue_table<64>();
constexpr auto kSquares63 = residue_table<63>();
constexpr auto kSquares65 = residue_table<65>();

}  // namespace

std::optional<Integer> as_perfect_square(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (!kSquares64[mpz_fdiv_ui(n.get_mpz_t(), 64)]) return std::nullopt;
  // 63 * 65 = 4095 fits one remainder computation.
  const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 4095);
  if (!kSquares63[r % 63] || !kSquares65[r % 65]) return std::nullopt;
  Integer root = isqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

std::optional<Integer> as_perfect_power(const Integer& n, unsigned long k) {
  if (n < 0 || k == 0) return std::nullopt;
  if (k == 2) return as_perfect_square(n);
  Integer root;
  if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

bool is_dyadic(const Rational& value) {
  const Integer& den = value.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;
}

DyadicInterval::DyadicInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  lo_.canonicalize();
  hi_.canonicalize();
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
  if (!is_dyadic(lo_) || !is_dyadic(hi_)) throw std::invalid_argument("interval endpoints must be dyadic");
}

DyadicInterval DyadicInterval::point(const Rational& value) { return DyadicInterval(value, value); }

DyadicInterval DyadicInterval::scaled(const Rational& c) const {
  if (!is_dyadic(c)) throw std::invalid_argument("scaling a dyadic interval by a non-dyadic factor");
  Rational a = lo_ * c;
  Rational b = hi_ * c;
  if (b < a) std::swap(a, b);
  return DyadicInterval(a, b);
}

AlgebraicRoot::AlgebraicRoot(Rational base, unsigned index) : base_(std::move(base)), index_(index) {
  base_.canonicalize();
  if (base_ <= 0) throw std::domain_error("algebraic root of a non-positive base");
  if (index_ == 0) throw std::domain_error("algebraic root of index 0");
  label_ = "(" + pascalpell::to_string(base_) + ")^(1/" + std::to_string(index_) + ")";
  if (base_.get_den() == 1) label_ = pascalpell::to_string(base_) + "^(1/" + std::to_string(index_) + ")";
}

AlgebraicRoot AlgebraicRoot::power(const Rational& base, unsigned numer, unsigned denom) {
  if (numer == 0) throw std::domain_error("zero exponent");
  Rational b = 1;
  for (unsigned i = 0; i < numer; ++i) b *= base;
  AlgebraicRoot r(b, denom);
  const std::string shown = base.get_den() == 1 ? pascalpell::to_string(base) : "(" + pascalpell::to_string(base) + ")";
  r.label_ = shown + "^(" + std::to_string(numer) + "/" + std::to_string(denom) + ")";
  return r;
}

AlgebraicRoot AlgebraicRoot::parse(std::string_view text) {
  text = trim(text);
  if (text.starts_with("sqrt(") && text.ends_with(")")) {
    AlgebraicRoot r = power(parse_rational(text.substr(5, text.size() - 6)), 1, 2);
    return r;
  }
  const auto caret = text.rfind('^');
  if (caret == std::string_view::npos) throw std::invalid_argument("expected base^(p/q): " + std::string(text));
  std::string_view base = trim(text.substr(0, caret));
  std::string_view expo = trim(text.substr(caret + 1));
  if (base.starts_with("(") && base.ends_with(")")) base = base.substr(1, base.size() - 2);
  if (expo.starts_with("(") && expo.ends_with(")")) expo = expo.substr(1, expo.size() - 2);
  const Rational e = parse_rational(expo);
  if (e <= 0 || e.get_num().fits_uint_p() == 0 || e.get_den().fits_uint_p() == 0)
    throw std::invalid_argument("exponent must be a positive fraction: " + std::string(text));
  return power(parse_rational(base), static_cast<unsigned>(e.get_num().get_ui()),
               static_cast<unsigned>(e.get_den().get_ui()));
}

std::optional<Rational> AlgebraicRoot::exact_value() const {
  const auto num = as_perfect_power(base_.get_num(), index_);
  if (!num) return std::nullopt;
  const auto den = as_perfect_power(base_.get_den(), index_);
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

DyadicInterval refine(const AlgebraicRoot& root, unsigned bits) {
  // floor(root * 2^bits) = floor((num * 2^(bits*k) / den)^(1/k)) = ikth_root(floor(...)).
  const unsigned k = root.index();
  Integer scaled_num = root.base().get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), static_cast<mp_bitcnt_t>(bits) * k);
  Integer quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), scaled_num.get_mpz_t(), root.base().get_den_mpz_t());
  const Integer r = ikth_root(quotient, k);

  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Integer rk;
  mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
  const bool exact = rk * root.base().get_den() == scaled_num;
  if (exact) return DyadicInterval::point(make_rational(r, scale));
  return DyadicInterval(make_rational(r, scale), make_rational(r + 1, scale));
}

}  // namespace pascalpell
