#pragma once

#include "eigenstrata/rational.hpp"

namespace eigenstrata {

/// value + derivative·ε with ε² = 0 (exact forward-mode differentiation).
struct Jet {
  Rational value;
  Rational deriv;

  Jet() = default;
  template <class I>
    requires std::integral<I>
  Jet(I v) : value(v) {}  // NOLINT(google-explicit-constructor)
  Jet(Rational v, Rational d = Rational(0)) : value(std::move(v)), deriv(std::move(d)) {}  // NOLINT

  static Jet variable(Rational v) { return {std::move(v), Rational(1)}; }

  Jet& operator+=(const Jet& o) { value += o.value; deriv += o.deriv; return *this; }
  Jet& operator-=(const Jet& o) { value -= o.value; deriv -= o.deriv; return *this; }
  Jet& operator*=(const Jet& o) {
    deriv = deriv * o.value + value * o.deriv;
    value *= o.value;
    return *this;
  }
  // (a + bε)/(c + dε) = a/c + (bc - ad)/c² ε; throws DivisionByZeroError when c = 0.
  Jet& operator/=(const Jet& o) {
    Rational inv = o.value.inverse();
    deriv = (deriv * o.value - value * o.deriv) * inv * inv;
    value *= inv;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator-(const Jet& a) { return {-a.value, -a.deriv}; }
  friend bool operator==(const Jet& a, const Jet& b) { return a.value == b.value && a.deriv == b.deriv; }
};

inline bool is_zero(const Jet& j) { return j.value.is_zero() && j.deriv.is_zero(); }
inline double pivot_score(const Jet& j) { return j.value.is_zero() ? 0.0 : 1.0; }

}  // namespace eigenstrata
