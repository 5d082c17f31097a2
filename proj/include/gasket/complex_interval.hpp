#pragma once

#include <iosfwd>

#include "gasket/interval.hpp"

namespace gasket {

/// Rectangular enclosure of a complex number.
struct ComplexInterval {
  Interval re;
  Interval im;

  constexpr ComplexInterval() = default;
  constexpr ComplexInterval(Interval r) : re(r), im(0.0) {}  // NOLINT
  constexpr ComplexInterval(double r) : re(r), im(0.0) {}    // NOLINT
  ComplexInterval(Interval r, Interval i) : re(r), im(i) {}

  ComplexInterval operator-() const { return {-re, -im}; }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator*(const Interval& s, const ComplexInterval& z) {
    return {s * z.re, s * z.im};
  }
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

  ComplexInterval& operator+=(const ComplexInterval& o) { return *this = *this + o; }
  ComplexInterval& operator*=(const ComplexInterval& o) { return *this = *this * o; }

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool is_exact_zero() const {
    return re.lower() == 0.0 && re.upper() == 0.0 && im.lower() == 0.0 && im.upper() == 0.0;
  }
  bool intersects(const ComplexInterval& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
  bool contains(double x, double y) const { return re.contains(x) && im.contains(y); }
  double max_width() const { return std::max(re.width(), im.width()); }
};

inline ComplexInterval conj(const ComplexInterval& z) { return {z.re, -z.im}; }

/// |z|^2
inline Interval norm2(const ComplexInterval& z) { return sqr(z.re) + sqr(z.im); }

inline Interval abs(const ComplexInterval& z) { return sqrt(norm2(z)); }

/// e^{i 2 pi j / 3} as an exact-in-sqrt(3) enclosure, j taken mod 3.
ComplexInterval cube_root_of_unity(int j);

std::ostream& operator<<(std::ostream& os, const ComplexInterval& z);

}  // namespace gasket
