#include "gasket/interval.hpp"

#include <cstdio>
#include <ostream>

namespace gasket {

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) throw std::logic_error("intersect: disjoint enclosures");
  return Interval(std::max(a.lower(), b.lower()), std::min(a.upper(), b.upper()));
}

Interval pow(const Interval& base, const Interval& exponent) {
  if (!base.certainly_positive()) {
    throw std::domain_error("pow: base must be certainly positive");
  }
  return exp(exponent * log(base));
}

Interval pow(const Interval& base, int n) {
  if (n < 0) return Interval(1.0) / pow(base, -n);
  Interval result(1.0);
  Interval b = base;
  // Odd powers of a sign-changing interval stay correct because `*` is
  // conservative; even powers go through sqr for tightness.
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n > 0) b = sqr(b);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << format_double(x.lower()) << ", " << format_double(x.upper()) << ']';
}

std::string format_double(double x, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, x);
  return buf;
}

}  // namespace gasket
