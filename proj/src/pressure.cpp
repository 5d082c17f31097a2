#include "gasket/pressure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gasket/constants.hpp"
#include "gasket/errors.hpp"

namespace gasket {

namespace r = rounding;

std::string to_string(DomainMode m) {
  return m == DomainMode::WholeDisk ? "whole-disk" : "first-level-refined";
}

std::string to_string(BudgetMode m) {
  return m == BudgetMode::Certified ? "certified" : "exploratory";
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kRescaleExponent = 400;

const Interval& ln2() {
  static const Interval v = log(Interval(2.0));
  return v;
}

struct LetterData {
  ComplexInterval a, b, c, d;
  Interval log_det;
};

LetterData letter_data(const Letter& e) {
  const MoebiusMap g = generator(e);
  return {g.a, g.b, g.c, g.d, log(abs(g.det()))};
}

// Bottom row (c, d) of a word matrix, stored as 2^-scale times the true row.
struct Row {
  ComplexInterval c, d;
  Interval log_det;
  int scale = 0;
};

Row first_row(const LetterData& g) { return {g.c, g.d, g.log_det, 0}; }

Row extend(const Row& row, const LetterData& g) {
  Row out{row.c * g.a + row.d * g.c, row.c * g.b + row.d * g.d, row.log_det + g.log_det,
          row.scale};
  const double mag = std::max({out.c.re.mag(), out.c.im.mag(), out.d.re.mag(), out.d.im.mag()});
  if (mag > std::ldexp(1.0, kRescaleExponent)) {
    auto s = [](const Interval& x) {
      return Interval(std::ldexp(x.lower(), -kRescaleExponent),
                      std::ldexp(x.upper(), -kRescaleExponent));
    };
    out.c = {s(out.c.re), s(out.c.im)};
    out.d = {s(out.d.re), s(out.d.im)};
    out.scale += kRescaleExponent;
  }
  return out;
}

struct LogExtrema {
  Interval log_sup;
  Interval log_inf;
};

// log of sup/inf of |det| / |cz+d|^2 over a union of disks.
LogExtrema extremise(const Row& row, const std::vector<Disk>& domain) {
  const Interval abs_c = abs(row.c);
  Interval near, far;
  bool first = true;
  for (const Disk& dom : domain) {
    const Interval centre = abs(row.c * dom.center + row.d);
    const Interval spread = dom.radius * abs_c;
    const Interval lo = centre - spread;
    if (!lo.certainly_positive()) throw PoleInDomain("word pole meets the extremisation domain");
    const Interval hi = centre + spread;
    if (first) {
      near = lo;
      far = hi;
      first = false;
    } else {
      near = min(near, lo);
      far = max(far, hi);
    }
  }
  if (first) throw std::invalid_argument("extremise: empty domain");
  const Interval shift = Interval(2.0 * row.scale) * ln2();
  const Interval two(2.0);
  return {row.log_det - two * log(near) - shift, row.log_det - two * log(far) - shift};
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) across worker threads; rethrows the first
// exception raised by any worker.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    out *= base;
  }
  return out;
}

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

// Enumerate bottom rows of all words of `depth` in index order.
std::vector<Row> enumerate_rows(const std::vector<LetterData>& g, int depth, unsigned threads) {
  const std::size_t A = g.size();
  const std::size_t per_first = ipow(A, depth - 1);
  std::vector<Row> rows(ipow(A, depth));
  parallel_for(A, threads, [&](std::size_t f) {
    auto visit = [&](auto&& self, int level, const Row& row, std::size_t idx) -> void {
      if (level == depth) {
        rows[idx] = row;
        return;
      }
      for (std::size_t i = 0; i < A; ++i) self(self, level + 1, extend(row, g[i]), idx * A + i);
    };
    visit(visit, 1, first_row(g[f]), f);
    (void)per_first;
  });
  return rows;
}

// Image disks of the closed unit disk under all words of length m.
std::vector<Disk> cylinder_disks(const std::vector<Letter>& letters, int m) {
  if (m == 0) return {Disk::unit()};
  std::vector<MoebiusMap> gens;
  for (const Letter& e : letters) gens.push_back(generator(e));
  std::vector<Disk> out;
  out.reserve(ipow(letters.size(), m));
  auto visit = [&](auto&& self, int level, const MoebiusMap& mat) -> void {
    if (level == m) {
      out.push_back(map_disk(mat, Disk::unit()));
      return;
    }
    for (const MoebiusMap& g : gens) self(self, level + 1, compose(mat, g));
  };
  for (const MoebiusMap& g : gens) visit(visit, 1, g);
  return out;
}

double sum_exp_upper(const double* logs, std::size_t count, double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    if (logs[i] == kNegInf) continue;
    s = r::add_up(s, r::exp_up(r::mul_up(t, logs[i])));
  }
  return s;
}

double sum_exp_lower(const double* logs, std::size_t count, double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    if (logs[i] == kNegInf) continue;
    s = r::add_down(s, r::exp_down(r::mul_down(t, logs[i])));
  }
  return s;
}

Interval sum_exp(const std::vector<double>& lo, const std::vector<double>& hi, const Interval& t) {
  double s_lo = 0.0, s_hi = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] == kNegInf) continue;
    const Interval term = exp(t * Interval(lo[i], hi[i]));
    s_lo = r::add_down(s_lo, term.lower());
    s_hi = r::add_up(s_hi, term.upper());
  }
  return Interval(s_lo, s_hi);
}

// Checks that |phi'_{k,n}| extrema over `domain` agree across k of equal parity,
// the exact symmetry behind folding the first letter's k into its parity.
bool parity_symmetry_holds(const std::vector<Letter>& letters, const std::vector<Disk>& domain) {
  for (const Letter& e : letters) {
    if (e.k > 2) continue;
    const LogExtrema base = extremise(first_row(letter_data(e)), domain);
    for (int k = e.k + 2; k <= 6; k += 2) {
      const Letter other{k, e.n};
      if (std::find(letters.begin(), letters.end(), other) == letters.end()) return false;
      const LogExtrema ext = extremise(first_row(letter_data(other)), domain);
      if (!ext.log_sup.intersects(base.log_sup) || !ext.log_inf.intersects(base.log_inf)) {
        return false;
      }
    }
  }
  return true;
}

void check_t(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("partition sums need t >= 0");
}

}  // namespace

std::size_t census_size(std::size_t alphabet_size, int depth) { return ipow(alphabet_size, depth); }

std::vector<Disk> domain_cover(const Subsystem& F, DomainMode mode, int truncation) {
  if (mode == DomainMode::WholeDisk) return {Disk::unit()};
  std::vector<Disk> out = first_level_disks(F, truncation);
  for (const Disk& d : residual_disks(F, truncation)) out.push_back(d);
  return out;
}

WordCensus::WordCensus(const std::vector<Letter>& letters, int depth,
                       const std::vector<Disk>& domain, const CensusOptions& options)
    : depth_(depth) {
  if (depth < 1) throw std::invalid_argument("WordCensus: depth must be positive");
  if (letters.empty()) throw std::invalid_argument("WordCensus: empty alphabet");
  if (domain.empty()) throw std::invalid_argument("WordCensus: empty domain");
  const std::size_t A = letters.size();
  std::vector<LetterData> g;
  g.reserve(A);
  for (const Letter& e : letters) g.push_back(letter_data(e));

  std::vector<std::size_t> firsts;
  if (options.symmetry_reduction && parity_symmetry_holds(letters, domain)) {
    for (std::size_t i = 0; i < A; ++i) {
      if (letters[i].k <= 2) firsts.push_back(i);
    }
    multiplicity_ = 3.0;
  } else {
    for (std::size_t i = 0; i < A; ++i) firsts.push_back(i);
  }

  const std::size_t per_first = ipow(A, depth - 1);
  words_ = ipow(A, depth);
  const std::size_t stored = sat_mul(firsts.size(), per_first);
  log_sup_lo_.assign(stored, kNegInf);
  log_sup_hi_.assign(stored, kNegInf);
  log_inf_lo_.assign(stored, kNegInf);
  log_inf_hi_.assign(stored, kNegInf);

  const bool prune = options.mode == BudgetMode::Exploratory;
  double max_letter_log_sup = kNegInf;
  if (prune) {
    for (const LetterData& ld : g) {
      max_letter_log_sup =
          std::max(max_letter_log_sup, extremise(first_row(ld), domain).log_sup.upper());
    }
  }
  std::atomic<bool> pruned{false};

  parallel_for(firsts.size(), resolve_threads(options.threads), [&](std::size_t slot) {
    auto visit = [&](auto&& self, int level, const Row& row, std::size_t idx) -> void {
      if (level == depth) {
        const LogExtrema ext = extremise(row, domain);
        log_sup_lo_[idx] = ext.log_sup.lower();
        log_sup_hi_[idx] = ext.log_sup.upper();
        log_inf_lo_[idx] = ext.log_inf.lower();
        log_inf_hi_[idx] = ext.log_inf.upper();
        return;
      }
      if (prune) {
        const double bound = extremise(row, domain).log_sup.upper() +
                             (depth - level) * std::max(max_letter_log_sup, 0.0);
        if (bound < options.prune_log_threshold) {
          pruned = true;
          return;  // entries stay at -inf and are skipped by the sums
        }
      }
      for (std::size_t i = 0; i < A; ++i) self(self, level + 1, extend(row, g[i]), idx * A + i);
    };
    visit(visit, 1, first_row(g[firsts[slot]]), slot);
  });
  certified_ = !pruned;
}

Interval WordCensus::z_max(const Interval& t) const {
  check_t(t.lower());
  return Interval(multiplicity_) * sum_exp(log_sup_lo_, log_sup_hi_, t);
}

Interval WordCensus::z_min(const Interval& t) const {
  check_t(t.lower());
  return Interval(multiplicity_) * sum_exp(log_inf_lo_, log_inf_hi_, t);
}

double WordCensus::z_max_upper(double t) const {
  check_t(t);
  return r::mul_up(multiplicity_, sum_exp_upper(log_sup_hi_.data(), log_sup_hi_.size(), t));
}

double WordCensus::z_min_lower(double t) const {
  check_t(t);
  return r::mul_down(multiplicity_, sum_exp_lower(log_inf_lo_.data(), log_inf_lo_.size(), t));
}

RatioCensus::RatioCensus(const std::vector<Letter>& letters, int n, int m,
                         const CensusOptions& options)
    : n_(n), m_(m) {
  if (n < 1 || m < 0) throw std::invalid_argument("RatioCensus: need n >= 1 and m >= 0");
  if (letters.empty()) throw std::invalid_argument("RatioCensus: empty alphabet");
  std::vector<LetterData> g;
  for (const Letter& e : letters) g.push_back(letter_data(e));
  const unsigned threads = resolve_threads(options.threads);
  const std::vector<Row> short_rows = enumerate_rows(g, n, threads);
  const std::vector<Row> long_rows = enumerate_rows(g, n + 1, threads);
  const std::vector<Disk> cylinders = cylinder_disks(letters, m);
  cylinders_ = cylinders.size();
  short_words_ = short_rows.size();
  long_words_ = long_rows.size();
  const std::size_t stride = short_words_ + long_words_;
  cells_ = cylinders_ * stride;
  log_sup_hi_.resize(cells_);
  log_inf_lo_.resize(cells_);
  parallel_for(cylinders_, threads, [&](std::size_t c) {
    const std::vector<Disk> dom{cylinders[c]};
    std::size_t at = c * stride;
    for (const Row& row : short_rows) {
      const LogExtrema ext = extremise(row, dom);
      log_sup_hi_[at] = ext.log_sup.upper();
      log_inf_lo_[at] = ext.log_inf.lower();
      ++at;
    }
    for (const Row& row : long_rows) {
      const LogExtrema ext = extremise(row, dom);
      log_sup_hi_[at] = ext.log_sup.upper();
      log_inf_lo_[at] = ext.log_inf.lower();
      ++at;
    }
  });
}

double RatioCensus::rho_max_upper(double t) const {
  check_t(t);
  const std::size_t stride = short_words_ + long_words_;
  double worst = 0.0;
  for (std::size_t c = 0; c < cylinders_; ++c) {
    const std::size_t at = c * stride;
    const double den = sum_exp_lower(log_inf_lo_.data() + at, short_words_, t);
    const double num = sum_exp_upper(log_sup_hi_.data() + at + short_words_, long_words_, t);
    if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, r::div_up(num, den));
  }
  return worst;
}

double RatioCensus::rho_min_lower(double t) const {
  check_t(t);
  const std::size_t stride = short_words_ + long_words_;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < cylinders_; ++c) {
    const std::size_t at = c * stride;
    const double den = sum_exp_upper(log_sup_hi_.data() + at, short_words_, t);
    const double num = sum_exp_lower(log_inf_lo_.data() + at + short_words_, long_words_, t);
    best = std::min(best, r::div_down(num, den));
  }
  return best;
}

PartitionBounds partition_bounds(const Subsystem& F, int depth, const Interval& t,
                                 DomainMode mode, const EnumerationBudget& budget) {
  if (!F.is_finite()) throw std::invalid_argument("partition_bounds: F must be finite");
  if (depth < 1) throw std::invalid_argument("partition_bounds: depth must be positive");
  const std::vector<Letter> letters = alphabet(F.members());
  const std::size_t size = census_size(letters.size(), depth);
  if (size > budget.max_words || depth > budget.max_depth) {
    throw BudgetExceeded("(6|F|)^n = " + std::to_string(size) + " exceeds the word budget");
  }
  CensusOptions opts;
  opts.domain = mode;
  opts.mode = budget.mode;
  opts.prune_log_threshold = budget.prune_log_threshold;
  const WordCensus census(letters, depth, domain_cover(F, mode, F.max_index()), opts);
  return {depth, t, census.z_min(t), census.z_max(t), mode, census.words(), census.certified()};
}

std::optional<double> bisect_upper(const std::function<bool(double)>& pass,
                                   const BisectionSettings& s) {
  if (!pass(s.hi)) return std::nullopt;
  double lo = s.lo, hi = s.hi;
  for (int it = 0; it < s.max_iterations && hi - lo > s.tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pass(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::optional<double> bisect_lower(const std::function<bool(double)>& pass,
                                   const BisectionSettings& s) {
  if (!pass(s.lo)) return std::nullopt;
  double lo = s.lo, hi = s.hi;
  for (int it = 0; it < s.max_iterations && hi - lo > s.tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pass(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

namespace {

// log ||phi'_n|| for n in (first - 1, first + count - 1], with the closed-form
// integral tails beyond.
class TailTable {
 public:
  TailTable(int M, long explicit_terms) : M_(M) {
    if (M < 0 || explicit_terms < 0) throw std::invalid_argument("tail: M and term count >= 0");
    logs_.reserve(static_cast<std::size_t>(explicit_terms));
    for (long i = 1; i <= explicit_terms; ++i) {
      logs_.push_back(log(phi_sup_norm(static_cast<int>(M + i))));
    }
  }

  Interval evaluate(const Interval& t) const {
    if (!(t.lower() > 0.5)) throw TailDiverges("sum of ||phi'_n||^t diverges for t <= 1/2");
    double lo = 0.0, hi = 0.0;
    for (const Interval& l : logs_) {
      const Interval term = exp(t * l);
      lo = r::add_down(lo, term.lower());
      hi = r::add_up(hi, term.upper());
    }
    const double last = static_cast<double>(M_) + static_cast<double>(logs_.size());
    const Interval two_t_minus_1 = Interval(2.0) * t - Interval(1.0);
    // sum_{n>N} n^-2t lies between the integrals from N+1 and from N.
    const Interval low_tail = pow(Interval::around(SystemConstants::deriv_lower_coeff), t) /
                              (two_t_minus_1 * pow(Interval(last + 1.0), two_t_minus_1));
    lo = r::add_down(lo, low_tail.lower());
    if (last >= 1.0) {
      const Interval high_tail = pow(Interval::around(SystemConstants::deriv_upper_coeff), t) /
                                 (two_t_minus_1 * pow(Interval(last), two_t_minus_1));
      hi = r::add_up(hi, high_tail.upper());
    } else {
      hi = std::numeric_limits<double>::infinity();
    }
    return Interval(6.0) * Interval(lo, hi);
  }

 private:
  int M_;
  std::vector<Interval> logs_;
};

CensusOptions census_options(const DimOptions& o) {
  CensusOptions c;
  c.domain = o.domain;
  c.symmetry_reduction = o.symmetry_reduction;
  c.threads = o.threads;
  c.mode = o.budget.mode;
  c.prune_log_threshold = o.budget.prune_log_threshold;
  return c;
}

void consider_upper(DimBracket& b, std::optional<double> u, int depth, const std::string& how) {
  if (u && *u < b.upper) {
    b.upper = *u;
    b.depth_upper = depth;
    b.method_upper = how;
  }
}

void consider_lower(DimBracket& b, std::optional<double> l, int depth, const std::string& how) {
  if (l && *l > b.lower) {
    b.lower = *l;
    b.depth_lower = depth;
    b.method_lower = how;
  }
}

void bracket_finite(const Subsystem& F, const DimOptions& o, bool want_upper, bool want_lower,
                    DimBracket& b) {
  const std::vector<Letter> letters = alphabet(F.members());
  const std::size_t A = letters.size();
  const EnumerationBudget& budget = o.budget;
  if (A > budget.max_words) {
    throw BudgetExceeded("alphabet of " + std::to_string(A) + " letters exceeds the word budget");
  }
  const std::vector<Disk> domain = domain_cover(F, o.domain, F.max_index());
  const CensusOptions copts = census_options(o);

  for (int d = 1; d <= budget.max_depth; ++d) {
    std::size_t size = census_size(A, d);
    if (o.symmetry_reduction) size /= 3;
    if (size > budget.max_words) {
      b.budget_exhausted = true;
      break;
    }
    const WordCensus census(letters, d, domain, copts);
    b.words_enumerated = sat_add(b.words_enumerated, census.stored());
    if (!census.certified()) b.certified = false;
    const std::string how = "partition(depth=" + std::to_string(d) + ")";
    if (want_upper) {
      consider_upper(b, bisect_upper([&](double t) { return census.z_max_upper(t) <= 1.0; }), d,
                     how);
    }
    if (want_lower) {
      consider_lower(b, bisect_lower([&](double t) { return census.z_min_lower(t) >= 1.0; }), d,
                     how);
    }
  }

  if (!o.use_ratio) return;
  for (int n = 1; n + 1 <= budget.max_depth; ++n) {
    const std::size_t base = sat_add(census_size(A, n), census_size(A, n + 1));
    if (base > budget.max_words) {
      b.budget_exhausted = true;
      break;
    }
    for (int m = 0; n + 1 + m <= budget.max_depth; ++m) {
      const std::size_t cells = sat_mul(census_size(A, m), base);
      if (cells > budget.max_words) {
        b.budget_exhausted = true;
        break;
      }
      const RatioCensus ratio(letters, n, m, copts);
      b.words_enumerated = sat_add(b.words_enumerated, ratio.cells());
      const std::string how =
          "ratio(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
      if (want_upper) {
        consider_upper(b, bisect_upper([&](double t) { return ratio.rho_max_upper(t) <= 1.0; }),
                       n + 1 + m, how);
      }
      if (want_lower) {
        consider_lower(b, bisect_lower([&](double t) { return ratio.rho_min_lower(t) >= 1.0; }),
                       n + 1 + m, how);
      }
    }
  }
}

// Upper bound for a cofinite F with letters n <= head enumerated. Returns the
// best over all affordable block lengths, or nullopt.
struct CofiniteResult {
  std::optional<double> upper;
  int depth = 0;
  std::size_t words = 0;
  bool exhausted = false;
};

CofiniteResult cofinite_upper(const Subsystem& F, int head, const DimOptions& o) {
  if (F.is_finite()) throw std::invalid_argument("cofinite bound needs a cofinite subsystem");
  if (head < F.max_index()) {
    throw std::invalid_argument("truncation must be at least every excluded index");
  }
  const std::vector<Letter> letters = alphabet(F.members_up_to(head));
  const std::vector<Disk> domain = domain_cover(F, o.domain, head);
  const CensusOptions copts = census_options(o);
  const TailTable rest(head, o.tail_terms);
  CofiniteResult out;

  std::vector<WordCensus> blocks;  // blocks[l-1] = head-only words of length l
  int max_depth = 0;
  for (int d = 1; d <= o.budget.max_depth; ++d) {
    if (letters.empty()) {
      max_depth = std::min(o.budget.max_depth, 8);
      break;
    }
    std::size_t size = census_size(letters.size(), d);
    if (o.symmetry_reduction) size /= 3;
    if (size > o.budget.max_words) {
      out.exhausted = true;
      break;
    }
    blocks.emplace_back(letters, d, domain, copts);
    out.words = sat_add(out.words, blocks.back().stored());
    max_depth = d;
  }

  for (int d = 1; d <= max_depth; ++d) {
    auto pass = [&](double t) {
      if (!(t > 0.5)) return false;
      const double R = rest.evaluate(Interval(t)).upper();
      std::vector<double> W(static_cast<std::size_t>(d) + 1, 0.0);
      for (int l = 1; l <= d && !letters.empty(); ++l) W[l] = blocks[l - 1].z_max_upper(t);
      // A[i]: bound on Z_i over Y. B[j] = A[j-1] R: words whose last rest
      // letter sits at position j. A[i] = B[i] + sum_{l=1..i} B[i-l] W_l.
      std::vector<double> A(static_cast<std::size_t>(d) + 1, 0.0), B(A.size(), 0.0);
      A[0] = 1.0;
      B[0] = 1.0;
      for (int i = 1; i <= d; ++i) {
        B[i] = r::mul_up(A[i - 1], R);
        double acc = B[i];
        for (int l = 1; l <= i; ++l) acc = r::add_up(acc, r::mul_up(B[i - l], W[l]));
        A[i] = acc;
      }
      return A[d] <= 1.0;
    };
    const std::optional<double> u = bisect_upper(pass);
    if (u && (!out.upper || *u < *out.upper)) {
      out.upper = u;
      out.depth = d;
    }
  }
  return out;
}

std::vector<int> cofinite_head_schedule(const Subsystem& F, int requested) {
  const int floor_head = std::max(F.max_index(), 1);
  std::vector<int> heads;
  if (requested > 0) {
    heads.push_back(std::max(requested, floor_head));
  } else {
    for (int h : {3, 6, 10, 26}) heads.push_back(std::max(h, floor_head));
  }
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
  return heads;
}

}  // namespace

DimBracket dim_bracket(const Subsystem& F, const DimOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  DimBracket b;
  b.subsystem = F;
  b.domain = options.domain;
  if (F.is_finite()) {
    bracket_finite(F, options, options.need_upper, options.need_lower, b);
  } else {
    if (options.need_upper) {
      for (int head : cofinite_head_schedule(F, 0)) {
        const CofiniteResult res = cofinite_upper(F, head, options);
        b.words_enumerated = sat_add(b.words_enumerated, res.words);
        b.budget_exhausted = b.budget_exhausted || res.exhausted;
        consider_upper(b, res.upper, res.depth,
                       "cofinite(head=" + std::to_string(head) +
                           ",depth=" + std::to_string(res.depth) + ")");
      }
    }
    if (options.need_lower) {
      const int cut = std::max(options.truncation, F.max_index() + 1);
      DimBracket finite_part;
      bracket_finite(F.truncated(cut), options, false, true, finite_part);
      b.words_enumerated = sat_add(b.words_enumerated, finite_part.words_enumerated);
      b.budget_exhausted = b.budget_exhausted || finite_part.budget_exhausted;
      consider_lower(b, finite_part.lower, finite_part.depth_lower,
                     "exhaustion(n<=" + std::to_string(cut) + ")/" + finite_part.method_lower);
    }
  }
  if (options.budget.mode == BudgetMode::Exploratory) b.certified = false;
  b.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return b;
}

double dim_upper_bound(const Subsystem& F, const EnumerationBudget& budget) {
  if (!F.is_finite()) throw std::invalid_argument("dim_upper_bound: use the cofinite variant");
  DimOptions o;
  o.budget = budget;
  o.need_lower = false;
  return dim_bracket(F, o).upper;
}

double dim_lower_bound(const Subsystem& F, const EnumerationBudget& budget) {
  DimOptions o;
  o.budget = budget;
  o.need_upper = false;
  return dim_bracket(F, o).lower;
}

double dim_upper_bound_cofinite(const Subsystem& F, int truncation,
                                const EnumerationBudget& budget, const DimOptions& options) {
  DimOptions o = options;
  o.budget = budget;
  const CofiniteResult res = cofinite_upper(F, truncation, o);
  return res.upper.value_or(2.0);
}

Interval z1_tail_bounds(const Interval& t, int M, long explicit_terms) {
  if (!(t.lower() > 0.5)) throw TailDiverges("sum of ||phi'_n||^t diverges for t <= 1/2");
  return TailTable(M, explicit_terms).evaluate(t);
}

}  // namespace gasket
