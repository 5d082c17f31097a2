#pragma once

// Outward-rounded interval arithmetic over IEEE doubles.
//
// Every primitive is evaluated in round-to-nearest and the result is pushed
// one ulp outward (two for libm transcendentals), so each returned interval
// contains the exact real result for any real inputs drawn from the operands.
// No rounding-mode switching is involved, which keeps the code safe under
// optimisation and across threads.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace gasket {

namespace rounding {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double next_up(double x) noexcept {
  if (std::isnan(x) || x == kInf) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits = (x > 0.0) ? bits + 1 : bits - 1;
  return std::bit_cast<double>(bits);
}

inline double next_down(double x) noexcept { return -next_up(-x); }

inline double add_up(double a, double b) noexcept { return next_up(a + b); }
inline double add_down(double a, double b) noexcept { return next_down(a + b); }
inline double mul_up(double a, double b) noexcept { return next_up(a * b); }
inline double mul_down(double a, double b) noexcept { return next_down(a * b); }
inline double div_up(double a, double b) noexcept { return next_up(a / b); }
inline double div_down(double a, double b) noexcept { return next_down(a / b); }

// glibc documents < 1 ulp for exp/log; two ulps of slack covers it.
inline double exp_up(double x) noexcept { return next_up(next_up(std::exp(x))); }
inline double exp_down(double x) noexcept {
  return std::max(0.0, next_down(next_down(std::exp(x))));
}
inline double log_up(double x) noexcept { return next_up(next_up(std::log(x))); }
inline double log_down(double x) noexcept { return next_down(next_down(std::log(x))); }

}  // namespace rounding

/// Closed interval [lower, upper] known to contain one exact real number.
class Interval {
 public:
  constexpr Interval() noexcept = default;

  /// Degenerate interval; `value` is taken as exact.
  constexpr Interval(double value) noexcept : lo_(value), hi_(value) {}  // NOLINT

  Interval(double lower, double upper) : lo_(lower), hi_(upper) {
    if (!(lower <= upper)) {
      throw std::invalid_argument("Interval: lower bound exceeds upper bound");
    }
  }

  /// Enclosure of a decimal constant that is not exactly representable,
  /// e.g. `around(0.45)` contains the real number 0.45.
  static Interval around(double decimal) noexcept {
    Interval r;
    r.lo_ = rounding::next_down(decimal);
    r.hi_ = rounding::next_up(decimal);
    return r;
  }

  static Interval hull(double a, double b) noexcept {
    Interval r;
    r.lo_ = std::min(a, b);
    r.hi_ = std::max(a, b);
    return r;
  }

  /// Integer values up to 2^53 are exact.
  static Interval from_int(long long v) noexcept { return Interval(static_cast<double>(v)); }

  double lower() const noexcept { return lo_; }
  double upper() const noexcept { return hi_; }
  double mid() const noexcept { return 0.5 * lo_ + 0.5 * hi_; }
  double width() const noexcept { return hi_ - lo_; }
  double mag() const noexcept { return std::max(std::fabs(lo_), std::fabs(hi_)); }

  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool intersects(const Interval& o) const noexcept { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool certainly_positive() const noexcept { return lo_ > 0.0; }
  bool certainly_negative() const noexcept { return hi_ < 0.0; }
  bool certainly_less(const Interval& o) const noexcept { return hi_ < o.lo_; }
  bool certainly_leq(const Interval& o) const noexcept { return hi_ <= o.lo_; }

  Interval operator-() const noexcept {
    Interval r;
    r.lo_ = -hi_;
    r.hi_ = -lo_;
    return r;
  }

  friend Interval operator+(const Interval& a, const Interval& b) noexcept {
    Interval r;
    r.lo_ = rounding::add_down(a.lo_, b.lo_);
    r.hi_ = rounding::add_up(a.hi_, b.hi_);
    return r;
  }

  friend Interval operator-(const Interval& a, const Interval& b) noexcept {
    Interval r;
    r.lo_ = rounding::add_down(a.lo_, -b.hi_);
    r.hi_ = rounding::add_up(a.hi_, -b.lo_);
    return r;
  }

  friend Interval operator*(const Interval& a, const Interval& b) noexcept {
    const double p1 = a.lo_ * b.lo_;
    const double p2 = a.lo_ * b.hi_;
    const double p3 = a.hi_ * b.lo_;
    const double p4 = a.hi_ * b.hi_;
    Interval r;
    r.lo_ = rounding::next_down(std::min(std::min(p1, p2), std::min(p3, p4)));
    r.hi_ = rounding::next_up(std::max(std::max(p1, p2), std::max(p3, p4)));
    return r;
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("Interval: division by an interval containing 0");
    const double q1 = a.lo_ / b.lo_;
    const double q2 = a.lo_ / b.hi_;
    const double q3 = a.hi_ / b.lo_;
    const double q4 = a.hi_ / b.hi_;
    Interval r;
    r.lo_ = rounding::next_down(std::min(std::min(q1, q2), std::min(q3, q4)));
    r.hi_ = rounding::next_up(std::max(std::max(q1, q2), std::max(q3, q4)));
    return r;
  }

  Interval& operator+=(const Interval& o) noexcept { return *this = *this + o; }
  Interval& operator-=(const Interval& o) noexcept { return *this = *this - o; }
  Interval& operator*=(const Interval& o) noexcept { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend Interval sqr(const Interval& a) noexcept {
    Interval r;
    if (a.lo_ >= 0.0) {
      r.lo_ = rounding::mul_down(a.lo_, a.lo_);
      r.hi_ = rounding::mul_up(a.hi_, a.hi_);
    } else if (a.hi_ <= 0.0) {
      r.lo_ = rounding::mul_down(a.hi_, a.hi_);
      r.hi_ = rounding::mul_up(a.lo_, a.lo_);
    } else {
      r.lo_ = 0.0;
      r.hi_ = rounding::mul_up(a.mag(), a.mag());
    }
    r.lo_ = std::max(r.lo_, 0.0);
    return r;
  }

  friend Interval sqrt(const Interval& a) {
    if (a.hi_ < 0.0) throw std::domain_error("Interval: sqrt of a negative interval");
    Interval r;
    r.lo_ = a.lo_ <= 0.0 ? 0.0 : std::max(0.0, rounding::next_down(std::sqrt(a.lo_)));
    r.hi_ = rounding::next_up(std::sqrt(a.hi_));
    return r;
  }

  friend Interval exp(const Interval& a) noexcept {
    Interval r;
    r.lo_ = rounding::exp_down(a.lo_);
    r.hi_ = rounding::exp_up(a.hi_);
    return r;
  }

  friend Interval log(const Interval& a) {
    if (!a.certainly_positive()) throw std::domain_error("Interval: log of a non-positive interval");
    Interval r;
    r.lo_ = rounding::log_down(a.lo_);
    r.hi_ = rounding::log_up(a.hi_);
    return r;
  }

  friend Interval abs(const Interval& a) noexcept {
    if (a.lo_ >= 0.0) return a;
    if (a.hi_ <= 0.0) return -a;
    Interval r;
    r.lo_ = 0.0;
    r.hi_ = a.mag();
    return r;
  }

  friend Interval min(const Interval& a, const Interval& b) noexcept {
    Interval r;
    r.lo_ = std::min(a.lo_, b.lo_);
    r.hi_ = std::min(a.hi_, b.hi_);
    return r;
  }

  friend Interval max(const Interval& a, const Interval& b) noexcept {
    Interval r;
    r.lo_ = std::max(a.lo_, b.lo_);
    r.hi_ = std::max(a.hi_, b.hi_);
    return r;
  }

  friend Interval hull(const Interval& a, const Interval& b) noexcept {
    Interval r;
    r.lo_ = std::min(a.lo_, b.lo_);
    r.hi_ = std::max(a.hi_, b.hi_);
    return r;
  }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// Intersection of two enclosures of the same number. Throws when disjoint,
/// which can only mean one of them was invalid.
Interval intersect(const Interval& a, const Interval& b);

/// base^exponent for base > 0, as exp(exponent * log(base)).
Interval pow(const Interval& base, const Interval& exponent);

/// Integer power by repeated squaring.
Interval pow(const Interval& base, int n);

std::ostream& operator<<(std::ostream& os, const Interval& x);

/// Shortest round-trip decimal for a double ("%.17g" trimmed).
std::string format_double(double x, int significant = 17);

}  // namespace gasket
