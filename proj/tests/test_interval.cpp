#include <algorithm>
#include <random>

#include "doctest.h"
#include "gasket/complex_interval.hpp"
#include "gasket/interval.hpp"
#include "oracle.hpp"

using gasket::Interval;
using oracle::mp;

TEST_SUITE("interval") {

TEST_CASE("directed rounding brackets the exact result") {
  namespace r = gasket::rounding;
  CHECK(r::next_up(1.0) > 1.0);
  CHECK(r::next_down(1.0) < 1.0);
  CHECK(r::next_up(0.0) > 0.0);
  CHECK(r::next_down(0.0) < 0.0);
  CHECK(r::next_up(-0.0) > 0.0);
  CHECK(r::next_up(r::kInf) == r::kInf);
  CHECK(mp(r::add_down(0.1, 0.2)) <= mp(0.1) + mp(0.2));
  CHECK(mp(r::add_up(0.1, 0.2)) >= mp(0.1) + mp(0.2));
  CHECK(mp(r::div_down(1.0, 3.0)) <= mp(1) / 3);
  CHECK(mp(r::div_up(1.0, 3.0)) >= mp(1) / 3);
}

TEST_CASE("constructor rejects inverted bounds") {
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
  CHECK_NOTHROW(Interval(1.0, 1.0));
}

TEST_CASE("around encloses decimal constants") {
  const Interval x = Interval::around(0.45);
  CHECK(oracle::encloses(x.lower(), x.upper(), mp("0.45")));
  const Interval y = Interval::around(3.821);
  CHECK(oracle::encloses(y.lower(), y.upper(), mp("3.821")));
  CHECK(x.width() > 0.0);
}

TEST_CASE("division by an interval containing zero throws") {
  CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), std::domain_error);
  CHECK_THROWS(log(Interval(-1.0, 2.0)));
  CHECK_THROWS(sqrt(Interval(-1.0, -0.5)));
}

TEST_CASE("sqr is tight across zero") {
  const Interval s = sqr(Interval(-2.0, 1.0));
  CHECK(s.lower() == 0.0);
  CHECK(s.upper() >= 4.0);
  CHECK(s.upper() < 4.0 + 1e-12);
}

TEST_CASE("pow and integer powers") {
  const Interval a = pow(Interval(2.0), 10);
  CHECK(a.contains(1024.0));
  const Interval b = pow(Interval(2.0), Interval(0.5));
  CHECK(oracle::encloses(b.lower(), b.upper(), sqrt(mp(2))));
  CHECK_THROWS(pow(Interval(-1.0, 1.0), Interval(0.5)));
  CHECK(pow(Interval(2.0), -2).contains(0.25));
}

TEST_CASE("complex cube roots of unity") {
  for (int j = 0; j < 3; ++j) {
    const auto w = gasket::cube_root_of_unity(j);
    const auto w3 = w * w * w;
    CHECK(w3.re.contains(1.0));
    CHECK(w3.im.contains(0.0));
  }
  const auto w = gasket::cube_root_of_unity(1);
  CHECK(abs(w).contains(1.0));
}

TEST_CASE("complex division inverts multiplication") {
  const gasket::ComplexInterval a(Interval(1.5), Interval(-0.25)), b(Interval(0.3), Interval(2.0));
  const auto q = (a * b) / b;
  CHECK(q.re.contains(1.5));
  CHECK(q.im.contains(-0.25));
  CHECK_THROWS(a / gasket::ComplexInterval(Interval(-1.0, 1.0), Interval(-1.0, 1.0)));
}

// Random soundness against 50-digit arithmetic: the exact image of a point
// drawn from each operand must lie inside the computed enclosure.
TEST_CASE("enclosure soundness on random inputs") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> U(-50.0, 50.0), W(0.0, 1e-3), P(1e-3, 20.0), F(0.0, 1.0);
  auto point = [&](const Interval& x) {
    return mp(std::clamp(x.lower() + F(rng) * x.width(), x.lower(), x.upper()));
  };
  int failures = 0;
  for (int i = 0; i < 20000; ++i) {
    const double a0 = U(rng), b0 = U(rng), p0 = P(rng);
    const Interval a(a0, a0 + W(rng)), b(b0, b0 + W(rng)), p(p0, p0 + W(rng));
    const Interval e(a0 / 10, a0 / 10 + W(rng));
    const mp x = point(a), y = point(b), q = point(p), z = point(e);
    auto in = [&](const Interval& enc, const mp& v) {
      if (!oracle::encloses(enc.lower(), enc.upper(), v)) ++failures;
    };
    in(a + b, x + y);
    in(a - b, x - y);
    in(a * b, x * y);
    if (!b.contains_zero()) in(a / b, x / y);
    in(sqr(a), x * x);
    in(sqrt(p), sqrt(q));
    in(log(p), log(q));
    in(exp(e), exp(z));
    in(pow(p, Interval(1.3057)), pow(q, mp(1.3057)));
  }
  CHECK(failures == 0);
}

}  // TEST_SUITE
