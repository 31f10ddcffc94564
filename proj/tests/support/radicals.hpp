#pragma once

// Interval evaluation of the closed-form radical inverses with MPFR directed
// rounding. Each operation widens outward, so the result encloses the true value.

#include <mpfr.h>

#include <utility>

#include "pascalpell/exactnum.hpp"

namespace radicals {

using pascalpell::Integer;
using pascalpell::Rational;

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }
  Interval(const Interval& o) : Interval(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval& operator=(const Interval&) = delete;
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval exact(const Rational& v, mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_set_q(out.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, v.get_mpq_t(), MPFR_RNDU);
    return out;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval out(a.prec());
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval out(a.prec());
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
  }
  /// Both operands positive.
  friend Interval operator*(const Interval& a, const Interval& b) {
    Interval out(a.prec());
    mpfr_mul(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }
  /// Both operands positive.
  friend Interval operator/(const Interval& a, const Interval& b) {
    Interval out(a.prec());
    mpfr_div(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_div(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
  }
  Interval sqrt() const {
    Interval out(prec());
    mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
    return out;
  }
  Interval cbrt() const {
    Interval out(prec());
    mpfr_cbrt(out.lo_, lo_, MPFR_RNDD);
    mpfr_cbrt(out.hi_, hi_, MPFR_RNDU);
    return out;
  }

  bool positive() const { return mpfr_sgn(lo_) > 0; }

  /// Exact endpoints as rationals.
  std::pair<Rational, Rational> bounds() const {
    Rational a, b;
    mpfr_get_q(a.get_mpq_t(), lo_);
    mpfr_get_q(b.get_mpq_t(), hi_);
    return {a, b};
  }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

inline Interval num(long v, mpfr_prec_t p) { return Interval::exact(Rational(v), p); }

/// n + 1 from m via the real root of 4(n+1)^3 - 4(n+1) = (2m+1)^3 - (2m+1), m >= 0.
inline Interval tetra_n_plus_1(const Rational& m, mpfr_prec_t p) {
  const Rational M = m + 1;
  // A = 27M - 81M^2 + 54M^3 and B^2 = -108 + 729(M - 3M^2 + 2M^3)^2, both exact.
  const Rational t = M - 3 * M * M + 2 * M * M * M;
  const Interval A = Interval::exact(27 * t, p);
  const Interval B = Interval::exact(729 * t * t - 108, p).sqrt();
  const Interval S = (A + B).cbrt();
  const Interval c = num(2, p).cbrt();
  return c / S + S / (num(3, p) * c);
}

/// n + 1 from q = 4n(n+1)(n+2) via the half-integer form.
inline Interval tetra_half_n_plus_1(const Rational& q, mpfr_prec_t p) {
  const Interval S = Interval::exact(q, p) + Interval::exact(q * q - pascalpell::make_rational(64, 27), p).sqrt();
  const Interval r = S.cbrt();
  return (num(4, p) + num(3, p) * r * r) / (num(6, p) * r);
}

/// v from u on the cubic u^3 - 2v^3 - 35u^2 + 40v^2 + 259u - 128v - 225 = 0.
inline Interval cubic_v(const Rational& u, mpfr_prec_t p) {
  const Rational a = 5770 + 13986 * u - 1890 * u * u + 54 * u * u * u;
  const Rational inner = 2885 + 27 * u * (259 + (u - 35) * u);
  const Interval B = num(2, p) * Interval::exact(inner * inner - 143982592, p).sqrt();
  const Interval S = (Interval::exact(a, p) + B).cbrt();
  return Interval::exact(pascalpell::make_rational(20, 3), p) + num(416, p) / (num(3, p) * S) + S / num(6, p);
}

}  // namespace radicals
