#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gasket/spectrum.hpp"

namespace gasket {

struct PublishedEstimate {
  Subsystem subsystem;
  double value;
};

/// Upper dimension estimates for the finite subsystems of the chain.
const std::vector<PublishedEstimate>& published_upper_estimates();
/// Lower dimension estimates for the cofinite subsystems of the chain, plus
/// the full system at its four-digit value.
const std::vector<PublishedEstimate>& published_lower_estimates();

std::optional<double> lookup(const std::vector<PublishedEstimate>& table, const Subsystem& F);

/// The 18-step chain as shipped in data/table1_steps.json.
std::vector<SpectrumStep> canonical_steps();

/// Full-system dimension as published to five digits.
inline constexpr double kFullDimension = 1.30568;
/// Four-digit value used as D(F) for the full system.
inline constexpr double kFullDimensionRounded = 1.3057;

}  // namespace gasket
