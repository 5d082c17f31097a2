#include "gasket/constants.hpp"

namespace gasket {

const Interval& lambda() {
  static const Interval value = sqrt(Interval(3.0));
  return value;
}

}  // namespace gasket
