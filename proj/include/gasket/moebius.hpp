#pragma once

#include <iosfwd>

#include "gasket/complex_interval.hpp"

namespace gasket {

/// z -> (a z + b) / (c z + d). Scalar multiples represent the same map; every
/// derivative quantity below is invariant under rescaling of the matrix.
struct MoebiusMap {
  ComplexInterval a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static MoebiusMap identity() { return {}; }

  /// Diagonal rotation z -> w z for a unit complex w.
  static MoebiusMap rotation(const ComplexInterval& w) {
    return {w, ComplexInterval(0.0), ComplexInterval(0.0), ComplexInterval(1.0)};
  }

  ComplexInterval det() const { return a * d - b * c; }

  /// Evaluate at z; throws PoleProximity when cz+d may vanish.
  ComplexInterval operator()(const ComplexInterval& z) const;

  /// Multiply every entry by an exact power of two.
  MoebiusMap scaled_pow2(int exponent) const;
};

/// compose(m1, m2) represents z -> m1(m2(z)).
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

/// True when the two enclosures can represent the same map, i.e. there is a
/// scalar s with m1 = s * m2. Checked by the vanishing of all 2x2 cross terms.
bool same_map(const MoebiusMap& m1, const MoebiusMap& m2);

struct Disk {
  ComplexInterval center;
  Interval radius;

  static Disk unit() { return {ComplexInterval(0.0), Interval(1.0)}; }
};

/// |m'(z)| = |det| / |cz+d|^2.
Interval deriv_magnitude(const MoebiusMap& m, const ComplexInterval& z);

struct DerivExtrema {
  Interval inf;
  Interval sup;
};

/// Enclosures of min and max of |m'| over the closed disk `dom`.
DerivExtrema deriv_extrema_on_disk(const MoebiusMap& m, const Disk& dom);

/// Enclosure of the image disk m(dom). The pole must lie outside dom.
Disk map_disk(const MoebiusMap& m, const Disk& dom);

/// Circle through three non-collinear points.
Disk circle_through(const ComplexInterval& p1, const ComplexInterval& p2,
                    const ComplexInterval& p3);

std::ostream& operator<<(std::ostream& os, const MoebiusMap& m);
std::ostream& operator<<(std::ostream& os, const Disk& d);

}  // namespace gasket
