#include "gasket/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "gasket/distortion.hpp"
#include "gasket/errors.hpp"
#include "gasket/tables.hpp"

namespace gasket {

namespace r = rounding;

std::string to_string(Provenance p) { return p == Provenance::Computed ? "computed" : "assumed"; }

namespace {

std::string fmt(double x, int sig = 10) { return format_double(x, sig); }

// Lower endpoints of log ||phi'_n|| for n = 1..size, grown on demand.
class LogNormCache {
 public:
  explicit LogNormCache(Interval (*norm)(int)) : norm_(norm) {}

  const std::vector<double>& get(long limit) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (static_cast<long>(lower_.size()) < limit) {
      lower_.reserve(static_cast<std::size_t>(limit));
      for (long n = static_cast<long>(lower_.size()) + 1; n <= limit; ++n) {
        lower_.push_back(log(norm_(static_cast<int>(n))).lower());
      }
    }
    return lower_;
  }

 private:
  Interval (*norm_)(int);
  std::mutex mutex_;
  std::vector<double> lower_;  // lower_[n - 1]
};

LogNormCache& log_norm_cache(bool exact) {
  static LogNormCache published(&phi_sup_norm), matrix(&phi_sup_norm_exact);
  return exact ? matrix : published;
}

// Lower bound of exp(t * l) for t in [t_lo, t_hi], l an exact lower endpoint.
double power_lower(const Interval& t, double l) {
  const double tl = l < 0.0 ? r::mul_down(t.upper(), l) : r::mul_down(t.lower(), l);
  return r::exp_down(tl);
}

Interval closed_form_margin_lhs(const Interval& t, long N) {
  const Interval two_t_minus_1 = Interval(2.0) * t - Interval(1.0);
  return Interval(6.0) * pow(Interval::around(SystemConstants::deriv_lower_coeff), t) /
         (two_t_minus_1 * pow(Interval(static_cast<double>(N) + 1.0), two_t_minus_1));
}

Interval closed_form_margin_rhs(const Interval& t, const Interval& K, long N) {
  return pow(K, Interval(2.0) * t) * pow(Interval::around(SystemConstants::deriv_upper_coeff), t) /
         pow(Interval(static_cast<double>(N)), Interval(2.0) * t);
}

void require_convergent(double t2) {
  if (!(Interval::around(t2).lower() > 0.5)) {
    throw TailDiverges("t2 = " + fmt(t2) + " <= 1/2: the tail sum diverges");
  }
}

}  // namespace

bool closed_form_holds(double t2, double K, long N) {
  require_convergent(t2);
  if (N < 1) return false;
  const Interval t = Interval::around(t2);
  return closed_form_margin_lhs(t, N).lower() >=
         closed_form_margin_rhs(t, Interval::around(K), N).upper();
}

long closed_form_threshold(double t2, double K, double cap) {
  require_convergent(t2);
  if (closed_form_holds(t2, K, 1)) return 1;
  long fail = 1, pass = 2;
  while (!closed_form_holds(t2, K, pass)) {
    fail = pass;
    if (static_cast<double>(pass) * 2.0 > cap) {
      throw ClosedFormNeverHolds("no N <= " + fmt(cap, 3) + " satisfies the closed form at t2 = " +
                                 fmt(t2) + ", K = " + fmt(K));
    }
    pass *= 2;
  }
  while (pass - fail > 1) {
    const long mid = fail + (pass - fail) / 2;
    if (closed_form_holds(t2, K, mid)) {
      pass = mid;
    } else {
      fail = mid;
    }
  }
  return pass;
}

TailVerdict check_tail_condition(double t2, double K, int M_start, const TailOptions& opts) {
  require_convergent(t2);
  if (M_start < 1) throw std::invalid_argument("check_tail_condition: M_start must be >= 1");
  TailVerdict v;
  v.t2 = t2;
  v.K = K;
  v.M_start = M_start;
  v.direct_sum_limit = opts.direct_sum_limit;
  v.exact_norms = opts.exact_norms;
  // 3.821/n^2 bounds both norms; 0.45/n^2 bounds the exact one only from
  // n = 2 on, and the closed form only sums n > M >= 1.
  v.N_closed_form = closed_form_threshold(t2, K, opts.closed_form_cap);

  const long N = v.N_closed_form;
  if (M_start >= N) {
    v.passed = true;
    v.worst_ratio = std::numeric_limits<double>::infinity();
    v.detail = "closed form holds from N = " + std::to_string(N) + " <= M_start";
    return v;
  }
  if (opts.direct_sum_limit < N) {
    v.detail = "direct sum limit " + std::to_string(opts.direct_sum_limit) +
               " is below N = " + std::to_string(N);
    return v;
  }

  const Interval t = Interval::around(t2);
  const Interval K2t = pow(Interval::around(K), Interval(2.0) * t);
  const long limit = opts.direct_sum_limit;
  const std::vector<double>& loglo = log_norm_cache(opts.exact_norms).get(limit);

  // Suffix sums, smallest terms first: S(M) = sum_{n=M+1}^{limit} lower(a_n^t).
  double S = 0.0;
  if (opts.integral_tail) {
    const Interval two_t_minus_1 = Interval(2.0) * t - Interval(1.0);
    S = (pow(Interval::around(SystemConstants::deriv_lower_coeff), t) /
         (two_t_minus_1 * pow(Interval(static_cast<double>(limit) + 1.0), two_t_minus_1)))
            .lower();
  }
  std::vector<double> suffix(static_cast<std::size_t>(N - M_start), 0.0);
  for (long n = limit; n > M_start; --n) {
    S = r::add_down(S, power_lower(t, loglo[static_cast<std::size_t>(n - 1)]));
    const long M = n - 1;
    if (M < N) suffix[static_cast<std::size_t>(M - M_start)] = S;
  }

  v.passed = true;
  v.worst_ratio = std::numeric_limits<double>::infinity();
  for (long M = M_start; M < N; ++M) {
    const double lhs = r::mul_down(6.0, suffix[static_cast<std::size_t>(M - M_start)]);
    const Interval norm_M = opts.exact_norms ? phi_sup_norm_exact(static_cast<int>(M))
                                             : phi_sup_norm(static_cast<int>(M));
    const double rhs = (K2t * pow(norm_M, t)).upper();
    ++v.directly_verified;
    v.worst_ratio = std::min(v.worst_ratio, lhs / rhs);
    if (!(lhs >= rhs)) {
      v.passed = false;
      if (v.first_failing_M == 0) v.first_failing_M = M;
    }
  }
  std::ostringstream os;
  os << "closed form from N = " << N << "; direct partial sums to " << limit << " for M in ["
     << M_start << ", " << N - 1 << "]";
  if (opts.exact_norms) os << " (matrix norms)";
  if (!v.passed) os << "; fails first at M = " << v.first_failing_M;
  v.detail = os.str();
  return v;
}

std::optional<std::pair<double, Provenance>> AssumedProvider::upper(const Subsystem& F) {
  if (auto v = lookup(published_upper_estimates(), F)) return std::make_pair(*v, Provenance::Assumed);
  return std::nullopt;
}

std::optional<std::pair<double, Provenance>> AssumedProvider::lower(const Subsystem& F) {
  if (auto v = lookup(published_lower_estimates(), F)) return std::make_pair(*v, Provenance::Assumed);
  return std::nullopt;
}

const DimBracket& ComputedProvider::bracket(const Subsystem& F) {
  const std::string key = F.to_string();
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, dim_bracket(F, options_)).first;
  return it->second;
}

std::optional<std::pair<double, Provenance>> ComputedProvider::upper(const Subsystem& F) {
  if (!F.is_finite()) return std::nullopt;
  const DimBracket& b = bracket(F);
  if (!b.certified || b.method_upper == "trivial") return std::nullopt;
  return std::make_pair(b.upper, Provenance::Computed);
}

std::optional<std::pair<double, Provenance>> ComputedProvider::lower(const Subsystem& F) {
  const DimBracket& b = bracket(F);
  if (!b.certified || b.method_lower == "trivial") return std::nullopt;
  return std::make_pair(b.lower, Provenance::Computed);
}

std::optional<std::pair<double, Provenance>> MixedProvider::upper(const Subsystem& F) {
  if (F.is_finite() && F.finite_size() <= max_computed_) return computed_.upper(F);
  return assumed_.upper(F);
}

std::optional<std::pair<double, Provenance>> MixedProvider::lower(const Subsystem& F) {
  return assumed_.lower(F);
}

std::unique_ptr<DimensionProvider> make_provider(const std::string& name, const DimOptions& options) {
  if (name == "assumed") return std::make_unique<AssumedProvider>();
  if (name == "computed") return std::make_unique<ComputedProvider>(options);
  if (name == "mixed") return std::make_unique<MixedProvider>(options);
  throw std::invalid_argument("unknown provider '" + name + "' (assumed, computed, mixed)");
}

namespace {

Verdict check_wellformed(const SpectrumStep& s) {
  Verdict v;
  v.provenance = Provenance::Computed;
  std::vector<std::string> problems;
  if (!(0.0 < s.t1 && s.t1 < s.t2)) problems.push_back("need 0 < t1 < t2");
  if (!s.F_tilde.is_finite()) {
    problems.push_back("F_tilde must be finite");
  } else {
    if (!s.F_tilde.subset_of(s.F)) problems.push_back("F_tilde is not a subset of F");
    const int top = s.F_tilde.max_index();
    // The tail sum over n > M runs over every index, so F must contain the
    // whole of (max F_tilde, oo) and F_tilde must be F's initial segment.
    if (s.F.members_up_to(top) != s.F_tilde.members()) {
      problems.push_back("F_tilde is not F cut at max F_tilde");
    }
    if (s.F.is_finite() || s.F.max_index() > top) {
      problems.push_back("F does not contain every n > max F_tilde");
    }
  }
  v.passed = problems.empty();
  for (const auto& p : problems) v.detail += (v.detail.empty() ? "" : "; ") + p;
  if (v.passed) v.detail = "F_tilde is the initial segment n <= " + std::to_string(s.F_tilde.max_index()) + " of F";
  return v;
}

Verdict check_upper(const SpectrumStep& s, DimensionProvider& p) {
  Verdict v;
  if (!s.F_tilde.is_finite()) {
    v.detail = "F_tilde not finite";
    return v;
  }
  std::optional<std::pair<double, Provenance>> u;
  try {
    u = p.upper(s.F_tilde);
  } catch (const GasketError& e) {
    v.detail = std::string("provider failed: ") + e.what();
    return v;
  }
  if (!u) {
    v.detail = "no upper bound available for " + s.F_tilde.to_string();
    return v;
  }
  v.value = u->first;
  v.provenance = u->second;
  // Published values are decimals compared against decimals; computed bounds
  // are rigorous doubles compared against the enclosure of t1.
  v.passed = u->second == Provenance::Assumed ? u->first <= s.t1
                                               : u->first <= Interval::around(s.t1).lower();
  v.detail = "dim(" + s.F_tilde.to_string() + ") <= " + fmt(u->first) + (v.passed ? " <= " : " > ") +
             "t1 = " + fmt(s.t1);
  return v;
}

Verdict check_lower(const SpectrumStep& s, DimensionProvider& p) {
  Verdict v;
  if (!(s.t2 <= s.D_F)) {
    v.detail = "t2 = " + fmt(s.t2) + " exceeds D(F) = " + fmt(s.D_F);
    return v;
  }
  std::optional<std::pair<double, Provenance>> l;
  try {
    l = p.lower(s.F);
  } catch (const GasketError& e) {
    v.detail = std::string("provider failed: ") + e.what();
    return v;
  }
  if (!l) {
    v.detail = "no lower bound available for " + s.F.to_string();
    return v;
  }
  v.value = l->first;
  v.provenance = l->second;
  if (l->second == Provenance::Assumed) {
    v.passed = l->first >= s.D_F;
    v.detail = "dim(" + s.F.to_string() + ") >= " + fmt(l->first) + (v.passed ? " >= " : " < ") +
               "D(F) = " + fmt(s.D_F);
    if (v.passed && s.F.is_everything() && s.D_F > kFullDimension) {
      v.detail += "; D(F) is the four-digit rounding of dim = 1.30568..., so the step's right "
                  "endpoint is dim itself";
    }
    return v;
  }
  if (l->first >= Interval::around(s.D_F).upper()) {
    v.passed = true;
    v.detail = "computed dim(" + s.F.to_string() + ") >= " + fmt(l->first) + " >= D(F)";
  } else if (l->first >= Interval::around(s.t2).upper()) {
    v.passed = true;
    v.detail = "computed dim(" + s.F.to_string() + ") >= " + fmt(l->first) +
               " is below D(F) but still >= t2";
  } else {
    v.detail = "computed dim(" + s.F.to_string() + ") >= " + fmt(l->first) +
               " certifies neither D(F) nor t2";
  }
  return v;
}

}  // namespace

Certificate check_step(const SpectrumStep& step, DimensionProvider& provider,
                       const TailOptions& tail) {
  Certificate c;
  c.step = step;
  c.t1 = step.t1;
  c.t2 = step.t2;
  c.wellformed = check_wellformed(step);
  c.check_dim_upper = check_upper(step, provider);
  c.check_dim_lower = check_lower(step, provider);

  const int M_start = step.F_tilde.is_finite() ? step.F_tilde.max_index() + 1 : 1;
  std::string why;
  const bool k_ok = is_certified_distortion_constant(step.K, step.F, &why);
  try {
    c.check_tail = check_tail_condition(step.t2, step.K, M_start, tail);
  } catch (const GasketError& e) {
    c.check_tail = TailVerdict{};
    c.check_tail.t2 = step.t2;
    c.check_tail.K = step.K;
    c.check_tail.M_start = M_start;
    c.check_tail.detail = e.what();
  }
  c.check_tail.K_certified = k_ok;
  if (!k_ok) {
    c.check_tail.passed = false;
    c.check_tail.detail = "K = " + fmt(step.K) + " is not a certified distortion constant for " +
                          step.F.to_string() + (why.empty() ? "" : " (" + why + ")") + "; " +
                          c.check_tail.detail;
  }
  c.passed = c.wellformed.passed && c.check_dim_upper.passed && c.check_dim_lower.passed &&
             c.check_tail.passed;
  return c;
}

ChainReport run_chain(const std::vector<SpectrumStep>& steps, DimensionProvider& provider,
                      const TailOptions& tail) {
  ChainReport rep;
  rep.provider = provider.name();
  std::vector<std::pair<double, double>> intervals;
  for (const SpectrumStep& s : steps) {
    rep.certificates.push_back(check_step(s, provider, tail));
    if (rep.certificates.back().passed) {
      ++rep.passed;
      intervals.emplace_back(s.t1, s.t2);
    }
  }
  std::sort(intervals.begin(), intervals.end());
  for (const auto& iv : intervals) {
    if (!rep.covered.empty() && iv.first <= rep.covered.back().second) {
      rep.covered.back().second = std::max(rep.covered.back().second, iv.second);
    } else {
      rep.covered.push_back(iv);
    }
  }
  for (std::size_t i = 1; i < rep.covered.size(); ++i) {
    rep.gaps.emplace_back(rep.covered[i - 1].second, rep.covered[i].first);
  }
  if (!rep.covered.empty()) {
    // The claim descends from the top of the spectrum: the component holding
    // the largest right endpoint.
    rep.final_claim = rep.covered.back();
    rep.reaches_half = rep.final_claim.first <= 0.5;
  }
  return rep;
}

}  // namespace gasket
