#include "gasket/moebius.hpp"

#include <cmath>
#include <ostream>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

ComplexInterval scale2(const ComplexInterval& z, int e) {
  // ldexp by a power of two is exact barring overflow/underflow.
  auto s = [e](const Interval& x) {
    return Interval(std::ldexp(x.lower(), e), std::ldexp(x.upper(), e));
  };
  return {s(z.re), s(z.im)};
}

}  // namespace

ComplexInterval MoebiusMap::operator()(const ComplexInterval& z) const {
  const ComplexInterval den = c * z + d;
  if (den.contains_zero()) throw PoleProximity("evaluation point encloses the pole");
  return (a * z + b) / den;
}

MoebiusMap MoebiusMap::scaled_pow2(int exponent) const {
  return {scale2(a, exponent), scale2(b, exponent), scale2(c, exponent), scale2(d, exponent)};
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
  return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
          m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

bool same_map(const MoebiusMap& m1, const MoebiusMap& m2) {
  const ComplexInterval p[4] = {m1.a, m1.b, m1.c, m1.d};
  const ComplexInterval q[4] = {m2.a, m2.b, m2.c, m2.d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!(p[i] * q[j] - p[j] * q[i]).contains_zero()) return false;
    }
  }
  return true;
}

Interval deriv_magnitude(const MoebiusMap& m, const ComplexInterval& z) {
  const ComplexInterval den = m.c * z + m.d;
  const Interval den2 = norm2(den);
  if (!den2.certainly_positive()) throw PoleProximity("|cz+d| encloses 0");
  return abs(m.det()) / den2;
}

DerivExtrema deriv_extrema_on_disk(const MoebiusMap& m, const Disk& dom) {
  const Interval det = abs(m.det());
  const Interval centre_mod = abs(m.c * dom.center + m.d);
  const Interval spread = dom.radius * abs(m.c);
  const Interval near = centre_mod - spread;
  if (!near.certainly_positive()) throw PoleInDomain("pole of the map meets the disk");
  const Interval far = centre_mod + spread;
  return {det / sqr(far), det / sqr(near)};
}

Disk map_disk(const MoebiusMap& m, const Disk& dom) {
  if (m.c.is_exact_zero()) {
    // Affine map: centre to centre, radius scaled by |a/d|.
    const ComplexInterval centre = m(dom.center);
    return {centre, dom.radius * abs(m.a) / abs(m.d)};
  }
  const DerivExtrema ext = deriv_extrema_on_disk(m, dom);  // also checks the pole
  if (m.c.contains_zero()) {
    // Nearly affine: fall back to the mean-value disk.
    return {m(dom.center), dom.radius * ext.sup};
  }
  const ComplexInterval pole = -(m.d / m.c);
  const ComplexInterval offset = pole - dom.center;
  const Interval dist = abs(offset);
  // Reflection of the pole through the boundary circle maps to the image centre.
  const ComplexInterval reflected =
      dom.center + ComplexInterval(sqr(dom.radius)) / conj(offset);
  const ComplexInterval centre = m(reflected);
  const ComplexInterval boundary = dom.center + (dom.radius / dist) * offset;
  const Interval radius = abs(m(boundary) - centre);
  return {centre, radius};
}

Disk circle_through(const ComplexInterval& p1, const ComplexInterval& p2,
                    const ComplexInterval& p3) {
  const Interval& x1 = p1.re;
  const Interval& y1 = p1.im;
  const Interval& x2 = p2.re;
  const Interval& y2 = p2.im;
  const Interval& x3 = p3.re;
  const Interval& y3 = p3.im;
  // Twice the signed area, doubled again (the usual circumcentre denominator).
  const Interval den = Interval(2.0) * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2));
  if (den.contains_zero()) throw CollinearPoints("triangle area encloses 0");
  const Interval s1 = norm2(p1);
  const Interval s2 = norm2(p2);
  const Interval s3 = norm2(p3);
  const Interval ux = (s1 * (y2 - y3) + s2 * (y3 - y1) + s3 * (y1 - y2)) / den;
  const Interval uy = (s1 * (x3 - x2) + s2 * (x1 - x3) + s3 * (x2 - x1)) / den;
  // R = |p1-p2| |p2-p3| |p3-p1| / (4 * area), and 4 * area = |den|.
  const Interval radius = abs(p1 - p2) * abs(p2 - p3) * abs(p3 - p1) / abs(den);
  return {ComplexInterval(ux, uy), radius};
}

std::ostream& operator<<(std::ostream& os, const MoebiusMap& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

std::ostream& operator<<(std::ostream& os, const Disk& d) {
  return os << "B(" << d.center << ", " << d.radius << ')';
}

}  // namespace gasket
