#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gasket/pressure.hpp"

namespace gasket {

enum class Provenance { Computed, Assumed };
std::string to_string(Provenance p);

/// One bootstrapping step: [t1, t2] lies in the dimension spectrum when
/// dim(F_tilde) <= t1, t2 <= D_F <= dim(F), and the tail condition holds.
struct SpectrumStep {
  int index = 0;
  Subsystem F = Subsystem::all();
  double D_F = 0.0;
  Subsystem F_tilde = Subsystem::finite({1});
  double t1 = 0.0;
  double t2 = 0.0;
  double K = 0.0;
  Provenance bound_provenance = Provenance::Assumed;
  std::string note;
};

struct Verdict {
  bool passed = false;
  Provenance provenance = Provenance::Assumed;
  std::optional<double> value;  // the bound the verdict relied on
  std::string detail;
};

struct TailOptions {
  long direct_sum_limit = 10'000'000;
  double closed_form_cap = 1e15;
  /// Add the integral lower bound beyond direct_sum_limit (off: partial sums only).
  bool integral_tail = false;
  /// Norms from the matrices (sup over the unit disk) instead of the
  /// published closed form, which omits the inner |f'| factor.
  bool exact_norms = false;
};

struct TailVerdict {
  bool passed = false;
  double t2 = 0.0;
  double K = 0.0;
  long N_closed_form = 0;  // smallest N found where the closed form holds
  int M_start = 0;
  long direct_sum_limit = 0;
  long directly_verified = 0;   // count of M in [M_start, N) checked
  long first_failing_M = 0;     // 0 when none
  double worst_ratio = 0.0;     // min over checked M of lower(LHS) / upper(RHS)
  bool K_certified = true;
  bool exact_norms = false;
  /// A pass stays valid for every t in (reuse_floor, t2] with the same K, M_start.
  double reuse_floor = 0.5;
  std::string detail;
};

/// Whether 6 * 0.45^t / ((2t-1)(N+1)^(2t-1)) >= K^(2t) * 3.821^t / N^(2t)
/// holds with certainty at t = t2 (decimal enclosures of t2 and K).
bool closed_form_holds(double t2, double K, long N);

/// Smallest N found with closed_form_holds; the left side grows with N so
/// every larger N also passes. Throws ClosedFormNeverHolds past `cap`.
long closed_form_threshold(double t2, double K, double cap = 1e15);

/// Condition 6 sum_{n>M} ||phi'_n||^t2 >= K^(2 t2) ||phi'_M||^t2 for all
/// M >= M_start. Throws TailDiverges for t2 <= 1/2.
TailVerdict check_tail_condition(double t2, double K, int M_start, const TailOptions& opts = {});

/// Source of dimension bounds for check_step.
class DimensionProvider {
 public:
  virtual ~DimensionProvider() = default;
  virtual std::string name() const = 0;
  /// Certified (or assumed) upper bound for dim J_{A_F}, F finite.
  virtual std::optional<std::pair<double, Provenance>> upper(const Subsystem& F) = 0;
  /// Certified (or assumed) lower bound for dim J_{A_F}.
  virtual std::optional<std::pair<double, Provenance>> lower(const Subsystem& F) = 0;
};

/// Values of the published bounds table, looked up by set equality.
class AssumedProvider : public DimensionProvider {
 public:
  std::string name() const override { return "assumed"; }
  std::optional<std::pair<double, Provenance>> upper(const Subsystem& F) override;
  std::optional<std::pair<double, Provenance>> lower(const Subsystem& F) override;
};

/// Bounds from the pressure engine; results are cached per subsystem.
class ComputedProvider : public DimensionProvider {
 public:
  explicit ComputedProvider(DimOptions options = {}) : options_(std::move(options)) {}
  std::string name() const override { return "computed"; }
  std::optional<std::pair<double, Provenance>> upper(const Subsystem& F) override;
  std::optional<std::pair<double, Provenance>> lower(const Subsystem& F) override;

 private:
  DimOptions options_;
  std::map<std::string, DimBracket> cache_;
  const DimBracket& bracket(const Subsystem& F);
};

/// Computed upper bounds for finite F with at most `max_computed` indices,
/// published values otherwise; lower bounds always published.
class MixedProvider : public DimensionProvider {
 public:
  explicit MixedProvider(DimOptions options = {}, std::size_t max_computed = 3)
      : computed_(std::move(options)), max_computed_(max_computed) {}
  std::string name() const override { return "mixed"; }
  std::optional<std::pair<double, Provenance>> upper(const Subsystem& F) override;
  std::optional<std::pair<double, Provenance>> lower(const Subsystem& F) override;

 private:
  AssumedProvider assumed_;
  ComputedProvider computed_;
  std::size_t max_computed_;
};

std::unique_ptr<DimensionProvider> make_provider(const std::string& name,
                                                 const DimOptions& options = {});

struct Certificate {
  SpectrumStep step;
  Verdict wellformed;
  Verdict check_dim_upper;
  Verdict check_dim_lower;
  TailVerdict check_tail;
  double t1 = 0.0, t2 = 0.0;
  bool passed = false;
};

Certificate check_step(const SpectrumStep& step, DimensionProvider& provider,
                       const TailOptions& tail = {});

struct ChainReport {
  std::vector<Certificate> certificates;
  std::vector<std::pair<double, double>> covered;  // union of passed [t1, t2], ascending
  bool assumes_mu_segment = true;                  // [0, 1/2) taken from the infinite-alphabet theory
  std::pair<double, double> final_claim{0.0, 0.0};
  bool reaches_half = false;                       // final_claim.first <= 1/2
  std::vector<std::pair<double, double>> gaps;     // uncovered stretches between components
  int passed = 0;
  std::string provider;
  bool all_passed() const { return passed == static_cast<int>(certificates.size()); }
};

/// Certifies every step and folds the passed intervals into the covered set.
ChainReport run_chain(const std::vector<SpectrumStep>& steps, DimensionProvider& provider,
                      const TailOptions& tail = {});

}  // namespace gasket
