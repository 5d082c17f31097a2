#include "gasket/complex_interval.hpp"

#include <ostream>

#include "gasket/constants.hpp"

namespace gasket {

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  const Interval den = norm2(b);
  const ComplexInterval num = a * conj(b);
  return {num.re / den, num.im / den};
}

ComplexInterval cube_root_of_unity(int j) {
  j %= 3;
  if (j < 0) j += 3;
  if (j == 0) return ComplexInterval(1.0);
  const Interval half_root = lambda() * Interval(0.5);
  return {Interval(-0.5), j == 1 ? half_root : -half_root};
}

std::ostream& operator<<(std::ostream& os, const ComplexInterval& z) {
  return os << '(' << z.re << " + i" << z.im << ')';
}

}  // namespace gasket
