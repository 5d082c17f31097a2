#include "gasket/apollonian.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "gasket/constants.hpp"
#include "gasket/errors.hpp"

namespace gasket {

namespace {

// e^{i theta_k} with theta_k = (-1)^k 2pi/3.
ComplexInterval inner_rotation(int k) { return cube_root_of_unity(k % 2 == 0 ? 1 : -1); }

// e^{i theta'_k} with theta'_k = 2pi k/3.
ComplexInterval outer_rotation(int k) { return cube_root_of_unity(k); }

}  // namespace

void validate(const Letter& e) {
  if (e.k < 1 || e.k > 6 || e.n < 1) {
    throw std::invalid_argument("invalid letter (" + std::to_string(e.k) + "," +
                                std::to_string(e.n) + ")");
  }
}

MoebiusMap f_matrix() { return f_power(1); }

MoebiusMap f_power(int n) {
  if (n < 0) throw std::invalid_argument("f_power: negative exponent");
  const Interval& l = lambda();
  const Interval m = Interval::from_int(n);
  return {ComplexInterval(l - m), ComplexInterval(m), ComplexInterval(-m), ComplexInterval(m + l)};
}

MoebiusMap generator(const Letter& e) {
  validate(e);
  const MoebiusMap outer = MoebiusMap::rotation(outer_rotation(e.k));
  const MoebiusMap inner = MoebiusMap::rotation(inner_rotation(e.k));
  return compose(compose(outer, f_power(e.n)), compose(inner, f_matrix()));
}

MoebiusMap generator_by_iteration(const Letter& e) {
  validate(e);
  MoebiusMap fn = MoebiusMap::identity();
  for (int i = 0; i < e.n; ++i) fn = compose(f_matrix(), fn);
  const MoebiusMap outer = MoebiusMap::rotation(outer_rotation(e.k));
  const MoebiusMap inner = MoebiusMap::rotation(inner_rotation(e.k));
  return compose(compose(outer, fn), compose(inner, f_matrix()));
}

MoebiusMap word_matrix(const Word& w) {
  if (w.empty()) throw std::invalid_argument("word_matrix: empty word");
  MoebiusMap m = generator(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) m = compose(m, generator(w[i]));
  return m;
}

Interval phi_sup_norm(int n) {
  if (n < 1) throw std::invalid_argument("phi_sup_norm: n must be positive");
  const Interval& l = lambda();
  const Interval nn = Interval::from_int(n);
  const Interval two_l = Interval(2.0) + l;
  // |-1 + lambda i - (1 + lambda/n)(2 + lambda)|
  const Interval re = Interval(-1.0) - (Interval(1.0) + l / nn) * two_l;
  const Interval dist = sqrt(sqr(re) + Interval(3.0));
  return Interval(3.0) / sqr(nn) * sqr(two_l) / sqr(dist - l);
}

Interval phi_sup_norm_exact(int n) {
  if (n < 1) throw std::invalid_argument("phi_sup_norm_exact: n must be positive");
  return deriv_extrema_on_disk(generator({1, n}), Disk::unit()).sup;
}

Interval descartes_next(const Interval& k1, const Interval& k2, const Interval& k3) {
  const Interval disc = k1 * k2 + k2 * k3 + k3 * k1;
  if (disc.certainly_negative()) throw NegativeDiscriminant("k1k2 + k2k3 + k3k1 < 0");
  if (disc.lower() < 0.0) throw NegativeDiscriminant("discriminant enclosure straddles 0");
  return k1 + k2 + k3 + Interval(2.0) * sqrt(disc);
}

std::vector<Disk> descartes_chain(int count) {
  if (count < 0) throw std::invalid_argument("descartes_chain: negative count");
  const Interval& l = lambda();
  const Interval outer = Interval(1.0) / l;
  std::vector<Disk> out;
  if (count == 0) return out;
  Interval k = Interval(2.0) + l;  // 1 / (2 - lambda)
  Interval radius = Interval(2.0) - l;
  Interval x(0.0);
  out.push_back({ComplexInterval(x), radius});
  for (int m = 1; m < count; ++m) {
    k = descartes_next(outer, outer, k);
    const Interval next = Interval(1.0) / k;
    x = x + radius + next;
    radius = next;
    out.push_back({ComplexInterval(x), radius});
  }
  return out;
}

bool natural_order_less(const Letter& e1, const Letter& e2) {
  return e1.n < e2.n || (e1.n == e2.n && e1.k < e2.k);
}

std::vector<Letter> alphabet(const std::vector<int>& indices) {
  std::vector<Letter> out;
  out.reserve(indices.size() * 6);
  for (int n : indices) {
    for (int k = 1; k <= 6; ++k) out.push_back({k, n});
  }
  return out;
}

Interval monotonicity_witness_H(int n) {
  if (n < 1) throw std::invalid_argument("monotonicity_witness_H: n must be positive");
  const Interval& l = lambda();
  const Interval nn = Interval::from_int(n);
  const Interval two_l = Interval(2.0) + l;
  const Interval u = two_l * (l / nn + Interval(1.0)) + Interval(1.0);
  const Interval s = sqrt(sqr(u) + Interval(3.0));
  return l * two_l * u / (nn * (s - l) * s);
}

Interval monotonicity_majorant_H(int n_min) {
  if (n_min < 1) throw std::invalid_argument("monotonicity_majorant_H: n_min must be positive");
  const Interval& l = lambda();
  const Interval nn = Interval::from_int(n_min);
  const Interval two_l = Interval(2.0) + l;
  // u is largest at n_min (numerator); the denominator is smallest as u -> 3 + lambda.
  const Interval u_max = two_l * (l / nn + Interval(1.0)) + Interval(1.0);
  const Interval u_min = two_l + Interval(1.0);
  const Interval s_min = sqrt(sqr(u_min) + Interval(3.0));
  return l * two_l * u_max / (nn * (s_min - l) * s_min);
}

std::vector<Disk> first_level_disks(const Subsystem& F, int truncation) {
  std::vector<Disk> out;
  for (const Letter& e : alphabet(F.members_up_to(truncation))) {
    out.push_back(map_disk(generator(e), Disk::unit()));
  }
  return out;
}

std::vector<Disk> residual_disks(const Subsystem& F, int truncation) {
  const bool has_tail = !F.is_finite() || F.max_index() > truncation;
  if (!has_tail) return {};
  const Disk base = map_disk(f_power(truncation + 1), Disk::unit());
  std::vector<Disk> out;
  for (int j = 0; j < 3; ++j) {
    out.push_back(map_disk(MoebiusMap::rotation(cube_root_of_unity(j)), base));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Letter& e) {
  return os << '(' << e.k << ',' << e.n << ')';
}

}  // namespace gasket
