#pragma once

#include <optional>

#include "gasket/spectrum.hpp"

// Single-field corruptions of a step; each one must make the step fail.
namespace mutations {

inline gasket::SpectrumStep t2_above_D(gasket::SpectrumStep s) {
  s.t2 = s.D_F + 0.001;
  return s;
}

// 4.0 is below every certified constant.
inline gasket::SpectrumStep wrong_K(gasket::SpectrumStep s) {
  s.K = 4.0;
  return s;
}

// Drops the largest index of F_tilde; nullopt for singletons.
inline std::optional<gasket::SpectrumStep> shrunk_F_tilde(gasket::SpectrumStep s) {
  auto m = s.F_tilde.members();
  if (m.size() < 2) return std::nullopt;
  m.pop_back();
  s.F_tilde = gasket::Subsystem::finite(m);
  return s;
}

}  // namespace mutations
