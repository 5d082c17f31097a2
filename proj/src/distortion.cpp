#include "gasket/distortion.hpp"

#include <sstream>
#include <stdexcept>

#include "gasket/constants.hpp"
#include "gasket/errors.hpp"

namespace gasket {

namespace {

constexpr int kMajorantStart = 23;

// The two square roots of the quotient h = (A + B) / (A - B).
Interval root_a(const Interval& lambda_over_n) {
  const Interval& l = lambda();
  return sqrt(sqr(Interval(0.5) + (Interval(1.0) + lambda_over_n) * (l + Interval(1.0))) +
              Interval(0.75));
}

Interval root_b(const Interval& lambda_over_n) {
  const Interval& l = lambda();
  return sqrt(sqr((Interval(3.0) - l) / Interval(2.0) + lambda_over_n) +
              Interval(0.75) * sqr(l - Interval(1.0)));
}

}  // namespace

Interval per_map_distortion_h(int n) {
  if (n < 1) throw std::invalid_argument("per_map_distortion_h: n must be positive");
  const Interval q = lambda() / Interval::from_int(n);
  const Interval a = root_a(q);
  const Interval b = root_b(q);
  return (a + b) / (a - b);
}

Interval h_majorant(int n_min) {
  if (n_min < 1) throw std::invalid_argument("h_majorant: n_min must be positive");
  // Numerator terms decrease in n, so n_min bounds them; the subtracted root
  // is smallest in the limit lambda/n -> 0.
  const Interval q = lambda() / Interval::from_int(n_min);
  const Interval b = root_b(q);
  return (root_a(q) + b) / (root_a(Interval(0.0)) - b);
}

Interval k1() {
  const Interval h1 = per_map_distortion_h(1);
  for (int n = 2; n < kMajorantStart; ++n) {
    if (!per_map_distortion_h(n).certainly_less(h1)) {
      throw MajorantFailure("h(" + std::to_string(n) + ") not certainly below h(1)");
    }
  }
  if (!h_majorant(kMajorantStart).certainly_less(h1)) {
    throw MajorantFailure("majorant at n = 23 does not certify h(n) < h(1)");
  }
  return sqr(h1);
}

Interval koebe_factor(const Interval& r, const Interval& R) {
  if (r.lower() < 0.0 || !R.certainly_positive()) {
    throw RatioOutOfRange("koebe_factor needs 0 <= r and R > 0");
  }
  const Interval q = r / R;
  if (!(q.upper() < 1.0)) throw RatioOutOfRange("koebe_factor needs r < R");
  const Interval one(1.0);
  return pow((one + q) / (one - q), 4);
}

KoebeInputs koebe_inputs(int which) {
  const Interval& l = lambda();
  const Interval two(2.0), three(3.0);
  switch (which) {
    case 1:  // n >= 1: disks of radius (2l-3)/3 centred on |z| = (4l-6)/3 inside B(0, 1+l)
      return {(two * l - three) / three,
              Interval(1.0) + l - (Interval(4.0) * l - Interval(6.0)) / three};
    case 2:
      return {(Interval(14.0) * l - Interval(15.0)) / Interval(121.0), l};
    case 3:
      return {(Interval(26.0) * l - Interval(21.0)) / Interval(529.0), l};
    default:
      throw std::invalid_argument("koebe_inputs: which must be 1, 2 or 3");
  }
}

double DistortionConstants::canonical_all() const {
  return K_all_within_published ? PublishedDistortion::K_all : K_all.upper();
}
double DistortionConstants::canonical_n_gt_1() const {
  return K_n_gt_1_within_published ? PublishedDistortion::K_n_gt_1 : K_n_gt_1.upper();
}
double DistortionConstants::canonical_n_gt_2() const {
  return K_n_gt_2_within_published ? PublishedDistortion::K_n_gt_2 : K_n_gt_2.upper();
}

const DistortionConstants& composite_constants() {
  static const DistortionConstants value = [] {
    DistortionConstants c;
    c.K1 = k1();
    auto koebe = [](int which) {
      const KoebeInputs in = koebe_inputs(which);
      return koebe_factor(in.r, in.R);
    };
    c.koebe_n1 = koebe(1);
    c.koebe_n2 = koebe(2);
    c.koebe_n3 = koebe(3);

    auto below = [](const Interval& x, double published) {
      return x.certainly_leq(Interval::around(published));
    };
    c.koebe_n1_within_published = below(c.koebe_n1, PublishedDistortion::koebe_n1);
    c.koebe_n2_within_published = below(c.koebe_n2, PublishedDistortion::koebe_n2);
    c.koebe_n3_within_published = below(c.koebe_n3, PublishedDistortion::koebe_n3);

    auto used = [](bool published_ok, double published, const Interval& sharp) {
      return published_ok ? Interval::around(published) : sharp;
    };
    c.koebe_n1_used = used(c.koebe_n1_within_published, PublishedDistortion::koebe_n1, c.koebe_n1);
    c.koebe_n2_used = used(c.koebe_n2_within_published, PublishedDistortion::koebe_n2, c.koebe_n2);
    c.koebe_n3_used = used(c.koebe_n3_within_published, PublishedDistortion::koebe_n3, c.koebe_n3);
    c.K_all = c.K1 * c.koebe_n1_used;
    c.K_n_gt_1 = c.K1 * c.koebe_n2_used;
    c.K_n_gt_2 = c.K1 * c.koebe_n3_used;
    c.K_all_sharp = c.K1 * c.koebe_n1;
    c.K_n_gt_1_sharp = c.K1 * c.koebe_n2;
    c.K_n_gt_2_sharp = c.K1 * c.koebe_n3;

    c.K_all_within_published = below(c.K_all, PublishedDistortion::K_all);
    c.K_n_gt_1_within_published = below(c.K_n_gt_1, PublishedDistortion::K_n_gt_1);
    c.K_n_gt_2_within_published = below(c.K_n_gt_2, PublishedDistortion::K_n_gt_2);
    return c;
  }();
  return value;
}

Interval empirical_word_distortion(const Word& w) {
  // sup/inf = (max|cz+d| / min|cz+d|)^2; the determinant cancels, which keeps
  // long words from losing it to cancellation.
  const MoebiusMap m = word_matrix(w);
  const Interval centre_mod = abs(m.d);
  const Interval spread = abs(m.c);
  const Interval near = centre_mod - spread;
  if (!near.certainly_positive()) throw PoleInDomain("pole of the word meets the unit disk");
  return sqr((centre_mod + spread) / near);
}

bool is_certified_distortion_constant(double K, const Subsystem& F, std::string* why) {
  const DistortionConstants& c = composite_constants();
  auto say = [why](const std::string& s) {
    if (why) *why = s;
  };
  if (c.K_all_within_published && K == PublishedDistortion::K_all) {
    say("K_A certified for every subsystem");
    return true;
  }
  if (c.K_n_gt_2_within_published && K == PublishedDistortion::K_n_gt_2) {
    if (F.all_greater_than(2)) {
      say("K_{A,n>2} certified; every index of F exceeds 2");
      return true;
    }
    say("4.3655 is only a distortion constant for subsystems with n > 2");
    return false;
  }
  std::ostringstream os;
  os << "K = " << K << " is not a certified distortion constant";
  if (K == PublishedDistortion::K_n_gt_1) os << " (published K_{A,n>1} is not reproduced)";
  say(os.str());
  return false;
}

}  // namespace gasket
