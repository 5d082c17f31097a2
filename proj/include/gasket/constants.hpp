#pragma once

#include "gasket/interval.hpp"

namespace gasket {

/// The enclosure of lambda = sqrt(3) shared by every module.
const Interval& lambda();

}  // namespace gasket
