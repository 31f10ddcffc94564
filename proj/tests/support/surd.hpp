#pragma once

// Exact arithmetic in Q(sqrt D): a + b sqrt(D) with rational a, b.

#include "pascalpell/exactnum.hpp"

namespace surd {

using pascalpell::Integer;
using pascalpell::Rational;

struct Surd {
  Rational a;
  Rational b;
  long D;

  friend Surd operator+(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b, x.D}; }
  friend Surd operator-(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b, x.D}; }
  friend Surd operator*(const Surd& x, const Surd& y) {
    return {x.a * y.a + x.D * x.b * y.b, x.a * y.b + x.b * y.a, x.D};
  }
  friend Surd operator*(const Rational& c, const Surd& x) { return {c * x.a, c * x.b, x.D}; }

  Surd pow(unsigned e) const {
    Surd out{1, 0, D};
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  bool is_rational() const { return b == 0; }
};

}  // namespace surd
