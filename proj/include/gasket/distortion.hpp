#pragma once

#include <string>

#include "gasket/apollonian.hpp"

namespace gasket {

/// h(n): the per-map distortion sup|phi'_{k,n}| / inf|phi'_{k,n}| is h(n)^2.
Interval per_map_distortion_h(int n);

/// Bound for h(n) valid for every n >= n_min.
Interval h_majorant(int n_min);

/// K1 = h(1)^2. Certifies h(n) <= h(1) for all n by direct evaluation for
/// n < 23 and the majorant from 23 on; throws MajorantFailure otherwise.
Interval k1();

/// ((1 + r/R) / (1 - r/R))^4; throws RatioOutOfRange unless 0 <= r < R.
Interval koebe_factor(const Interval& r, const Interval& R);

/// Published bounds the derived values are checked against.
struct PublishedDistortion {
  static constexpr double koebe_n1 = 1.6678634;
  static constexpr double koebe_n2 = 1.42372;
  static constexpr double koebe_n3 = 1.234;
  static constexpr double K_all = 5.900319;
  static constexpr double K_n_gt_1 = 5.03661;
  static constexpr double K_n_gt_2 = 4.3655;
  static constexpr double K1 = 3.53765052763825;
};

struct KoebeInputs {
  Interval r;
  Interval R;
};

/// Disk radii r and Koebe radii R for the n>0, n>1, n>2 subsystems.
KoebeInputs koebe_inputs(int which);

struct DistortionConstants {
  Interval K1;
  Interval koebe_n1, koebe_n2, koebe_n3;  // sharp evaluations

  // Koebe factor fed into each composite: the published bound when it is
  // certified to dominate the sharp value, otherwise the sharp value itself.
  Interval koebe_n1_used, koebe_n2_used, koebe_n3_used;
  Interval K_all, K_n_gt_1, K_n_gt_2;
  // K1 times the sharp Koebe factor.
  Interval K_all_sharp, K_n_gt_1_sharp, K_n_gt_2_sharp;

  bool koebe_n1_within_published = false;
  bool koebe_n2_within_published = false;
  bool koebe_n3_within_published = false;
  bool K_all_within_published = false;
  bool K_n_gt_1_within_published = false;
  bool K_n_gt_2_within_published = false;

  /// Value used downstream: the published constant when the derived upper
  /// endpoint sits below it, otherwise the derived upper endpoint.
  double canonical_all() const;
  double canonical_n_gt_1() const;
  double canonical_n_gt_2() const;
};

/// Computed once; thread-safe.
const DistortionConstants& composite_constants();

/// Enclosure of sup/inf of |phi'_w| over the closed unit disk.
Interval empirical_word_distortion(const Word& w);

/// True when K is a certified distortion constant for A_F: 5.900319 for any
/// F, 4.3655 when every member of F exceeds 2.
bool is_certified_distortion_constant(double K, const Subsystem& F, std::string* why = nullptr);

}  // namespace gasket
