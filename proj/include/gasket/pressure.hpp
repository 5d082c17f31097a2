#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gasket/apollonian.hpp"

namespace gasket {

enum class DomainMode { WholeDisk, FirstLevelRefined };
enum class BudgetMode { Certified, Exploratory };

std::string to_string(DomainMode m);
std::string to_string(BudgetMode m);

struct EnumerationBudget {
  std::size_t max_words = 2'000'000;  // per census (words, or cylinder-word cells)
  int max_depth = 64;
  BudgetMode mode = BudgetMode::Certified;
  double prune_log_threshold = -60.0;  // Exploratory: drop subtrees with log-derivative below this
};

struct CensusOptions {
  DomainMode domain = DomainMode::FirstLevelRefined;
  bool symmetry_reduction = false;
  unsigned threads = 0;  // 0 = hardware concurrency
  BudgetMode mode = BudgetMode::Certified;
  double prune_log_threshold = -60.0;
};

/// Domain Y over which derivatives are extremised. FirstLevelRefined gives
/// the images of the closed unit disk under the letters of F with
/// n <= truncation plus the residual disks of the tail.
std::vector<Disk> domain_cover(const Subsystem& F, DomainMode mode, int truncation);

/// Per-word enclosures of log sup_Y |phi'_w| and log inf_Y |phi'_w| for all
/// words of one length over a finite alphabet. Word w = (i_1..i_d) sits at
/// index sum i_j A^(d-j), with letters in natural order.
class WordCensus {
 public:
  WordCensus(const std::vector<Letter>& letters, int depth, const std::vector<Disk>& domain,
             const CensusOptions& options = {});

  int depth() const noexcept { return depth_; }
  std::size_t stored() const noexcept { return log_sup_hi_.size(); }
  /// Words represented, including those folded away by symmetry.
  std::size_t words() const noexcept { return words_; }
  bool certified() const noexcept { return certified_; }
  bool symmetry_reduced() const noexcept { return multiplicity_ != 1.0; }

  /// Enclosures of Z_max = sum sup^t and Z_min = sum inf^t.
  Interval z_max(const Interval& t) const;
  Interval z_min(const Interval& t) const;
  /// One-sided fast paths at an exact t: an upper bound of Z_max and a lower
  /// bound of Z_min.
  double z_max_upper(double t) const;
  double z_min_lower(double t) const;

  Interval log_sup(std::size_t i) const { return Interval(log_sup_lo_[i], log_sup_hi_[i]); }
  Interval log_inf(std::size_t i) const { return Interval(log_inf_lo_[i], log_inf_hi_[i]); }

 private:
  int depth_ = 0;
  std::size_t words_ = 0;
  double multiplicity_ = 1.0;
  bool certified_ = true;
  std::vector<double> log_sup_lo_, log_sup_hi_, log_inf_lo_, log_inf_hi_;
};

/// Number of words a census of this shape enumerates (saturates at SIZE_MAX).
std::size_t census_size(std::size_t alphabet_size, int depth);

/// Ratio certificate over a cover of the limit set by level-m cylinders C:
/// with g_n = sum_{|w|=n} |phi'_w|^t, sup_C g_{n+1} <= inf_C g_n on every C
/// gives P(t) <= 0, and inf_C g_{n+1} >= sup_C g_n gives P(t) >= 0.
class RatioCensus {
 public:
  RatioCensus(const std::vector<Letter>& letters, int n, int m, const CensusOptions& options = {});

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::size_t cells() const noexcept { return cells_; }

  /// Upper bound of max_C sum_{n+1} sup_C^t / sum_n inf_C^t.
  double rho_max_upper(double t) const;
  /// Lower bound of min_C sum_{n+1} inf_C^t / sum_n sup_C^t.
  double rho_min_lower(double t) const;

 private:
  int n_, m_;
  std::size_t cylinders_ = 0, short_words_ = 0, long_words_ = 0, cells_ = 0;
  // Per cylinder: short words then long words.
  std::vector<double> log_sup_hi_, log_inf_lo_;
};

struct PartitionBounds {
  int depth = 0;
  Interval t;
  Interval z_min;
  Interval z_max;
  DomainMode domain_mode = DomainMode::FirstLevelRefined;
  std::size_t words = 0;
  bool certified = true;
};

/// Z_n bounds over a finite subsystem. Throws BudgetExceeded when
/// (6|F|)^depth exceeds the budget, PoleInDomain on a malformed domain.
PartitionBounds partition_bounds(const Subsystem& F, int depth, const Interval& t,
                                 DomainMode mode = DomainMode::FirstLevelRefined,
                                 const EnumerationBudget& budget = {});

struct BisectionSettings {
  double lo = 0.0;
  double hi = 2.0;
  double tolerance = 1e-6;
  int max_iterations = 80;
};

/// Smallest-found t with pass(t) true, searching downward from `hi`.
/// Returns nullopt when pass(hi) fails. The result always satisfied pass.
std::optional<double> bisect_upper(const std::function<bool(double)>& pass,
                                   const BisectionSettings& s = {});
/// Largest-found t with pass(t) true, searching upward from `lo`.
std::optional<double> bisect_lower(const std::function<bool(double)>& pass,
                                   const BisectionSettings& s = {});

struct DimOptions {
  EnumerationBudget budget;
  DomainMode domain = DomainMode::FirstLevelRefined;
  bool use_ratio = true;
  bool symmetry_reduction = false;
  unsigned threads = 0;
  int truncation = 26;          // cofinite: finite part used for the lower bound
  long tail_terms = 10'000;     // cofinite: explicit terms before the integral tail
  bool need_lower = true;
  bool need_upper = true;
};

struct DimBracket {
  Subsystem subsystem = Subsystem::all();
  double lower = 0.0;
  double upper = 2.0;
  int depth_lower = 0;
  int depth_upper = 0;
  std::string method_lower = "trivial";
  std::string method_upper = "trivial";
  DomainMode domain = DomainMode::FirstLevelRefined;
  bool certified = true;
  bool budget_exhausted = false;  // some configuration was skipped for budget
  std::size_t words_enumerated = 0;
  double wall_time_s = 0.0;
};

/// Certified bracket for a finite or cofinite subsystem.
DimBracket dim_bracket(const Subsystem& F, const DimOptions& options = {});

/// dim <= returned value. Finite F only.
double dim_upper_bound(const Subsystem& F, const EnumerationBudget& budget = {});
/// dim >= returned value. Finite F, or cofinite via finite exhaustion.
double dim_lower_bound(const Subsystem& F, const EnumerationBudget& budget = {});

/// Upper bound for a cofinite subsystem. Letters n <= truncation are
/// enumerated, the rest enter through the closed-form tail.
double dim_upper_bound_cofinite(const Subsystem& F, int truncation,
                                const EnumerationBudget& budget = {},
                                const DimOptions& options = {});

/// Enclosure of 6 * sum_{n > M} ||phi'_n||^t. Throws TailDiverges for t <= 1/2.
Interval z1_tail_bounds(const Interval& t, int M, long explicit_terms = 10'000);

}  // namespace gasket
