#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gasket {

/// A set F of second indices n (all six k are always included). Either a
/// finite set, or the complement in N of a finite exclusion set.
class Subsystem {
 public:
  /// Throws std::invalid_argument on an empty set or non-positive members.
  static Subsystem finite(std::vector<int> members);
  static Subsystem cofinite(std::vector<int> excluded = {});
  static Subsystem all() { return cofinite({}); }
  static Subsystem up_to(int n);

  /// Text grammar, whitespace-insensitive:
  ///   all | N | {3,4,5} | n<=26 | n<5 | n>2 | n>=3 | n==5 | n!=5
  ///   n in {3,4,5} | n != {11,12} | n notin {1..4}
  /// Sets accept ranges a..b. Terms combine with `&`, `&&` or `and`.
  /// Throws ParseError.
  static Subsystem parse(std::string_view text);

  bool is_finite() const noexcept { return finite_; }
  bool is_everything() const noexcept { return !finite_ && set_.empty(); }

  /// Sorted members; finite subsystems only.
  const std::vector<int>& members() const;
  /// Sorted exclusions; cofinite subsystems only.
  const std::vector<int>& excluded() const;

  bool contains(int n) const;
  /// Largest member (finite) or largest exclusion, 0 if none (cofinite).
  int max_index() const noexcept;
  int min_index() const;
  /// Members n <= limit, ascending.
  std::vector<int> members_up_to(int limit) const;
  /// F intersected with [1, limit], as a finite subsystem.
  Subsystem truncated(int limit) const;
  std::size_t finite_size() const;

  bool subset_of(const Subsystem& other) const;
  /// True when every member exceeds m.
  bool all_greater_than(int m) const;

  /// Canonical text form; parse(to_string()) == *this.
  std::string to_string() const;

  bool operator==(const Subsystem& o) const = default;

 private:
  Subsystem(bool finite, std::vector<int> set);
  bool finite_ = true;
  std::vector<int> set_;
};

}  // namespace gasket
