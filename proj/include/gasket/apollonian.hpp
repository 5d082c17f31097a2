#pragma once

#include <iosfwd>
#include <vector>

#include "gasket/moebius.hpp"
#include "gasket/subsystem.hpp"

namespace gasket {

/// Alphabet letter (k, n): rotation index k in 1..6, depth index n >= 1.
struct Letter {
  int k = 1;
  int n = 1;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Throws std::invalid_argument unless 1 <= k <= 6 and n >= 1.
void validate(const Letter& e);

/// Derivative-norm coefficients: 0.45/n^2 < ||phi'_n|| < 3.821/n^2.
struct SystemConstants {
  static constexpr double deriv_lower_coeff = 0.45;
  static constexpr double deriv_upper_coeff = 3.821;
};

/// The parabolic map f as the matrix (lambda-1, 1; -1, lambda+1).
MoebiusMap f_matrix();

/// f^n in closed form, (lambda-n, n; -n, n+lambda), a scalar multiple of F^n.
MoebiusMap f_power(int n);

/// phi_{k,n} = R_{theta'_k} o f^n o R_{theta_k} o f with theta_k = (-1)^k 2pi/3
/// and theta'_k = 2pi k/3.
MoebiusMap generator(const Letter& e);

/// Same map assembled from n explicit multiplications by F; test oracle only.
MoebiusMap generator_by_iteration(const Letter& e);

/// Left-to-right product phi_{w1} o phi_{w2} o ... . Throws on an empty word.
MoebiusMap word_matrix(const Word& w);

/// Published closed form for ||phi'_{k,n}||, independent of k. It is the sup
/// of |(f^n)'| over R_theta f(closed unit disk), i.e. it omits the factor
/// |f'| <= 1, so it dominates the sup of |phi'_{k,n}| over the unit disk.
Interval phi_sup_norm(int n);
/// Sup of |phi'_{k,n}| over the closed unit disk, from the matrix.
Interval phi_sup_norm_exact(int n);

/// Largest root of Descartes' relation (inner Soddy curvature).
Interval descartes_next(const Interval& k1, const Interval& k2, const Interval& k3);

/// Apollonian circles A_1, A_2, ... nested along the positive real axis:
/// A_1 = B(0, 2 - lambda), each next one tangent to the previous and to the
/// generating circles B(1 +- lambda i, lambda).
std::vector<Disk> descartes_chain(int count);

/// Strict natural order: n ascending, then k ascending.
bool natural_order_less(const Letter& e1, const Letter& e2);

/// All letters of a finite set of indices in natural order.
std::vector<Letter> alphabet(const std::vector<int>& indices);

/// H(n); H(n) < 1 certifies that the sup-norm is decreasing at n.
Interval monotonicity_witness_H(int n);

/// Closed-form bound for H(n) valid for every n >= n_min.
Interval monotonicity_majorant_H(int n_min);

/// Images phi_{k,n}(closed unit disk) for n in F with n <= truncation,
/// in natural order.
std::vector<Disk> first_level_disks(const Subsystem& F, int truncation);

/// Three disks R_{2 pi j/3}(f^{truncation+1}(D)) containing phi_{k,n}(D) for
/// every n > truncation. Empty when F has no member beyond `truncation`.
std::vector<Disk> residual_disks(const Subsystem& F, int truncation);

std::ostream& operator<<(std::ostream& os, const Letter& e);

}  // namespace gasket
