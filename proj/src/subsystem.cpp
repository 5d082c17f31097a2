#include "gasket/subsystem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

std::vector<int> normalise(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

// "3,4,5" -> "3..5" for runs of three or more.
std::string format_set(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    if (i != 0) os << ',';
    if (j - i >= 2) {
      os << v[i] << ".." << v[j];
    } else {
      os << v[i];
      if (j > i) os << ',' << v[j];
    }
    i = j + 1;
  }
  os << '}';
  return os.str();
}

bool is_prefix_range(const std::vector<int>& v) {
  return !v.empty() && v.front() == 1 && v.back() == static_cast<int>(v.size());
}

// Either a finite set or a cofinite exclusion, kept separate from Subsystem so
// that empty intermediate results can be reported with context.
struct Term {
  bool finite;
  std::vector<int> set;
};

Term conjoin(const Term& a, const Term& b) {
  if (a.finite && b.finite) return {true, set_intersection(a.set, b.set)};
  if (a.finite) return {true, set_difference(a.set, b.set)};
  if (b.finite) return {true, set_difference(b.set, a.set)};
  return {false, set_union(a.set, b.set)};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : original_(text) {
    for (unsigned char ch : text) {
      if (!std::isspace(ch)) s_.push_back(static_cast<char>(ch));
    }
  }

  Term parse() {
    if (s_.empty()) fail("empty subsystem specification");
    Term t = term();
    while (!at_end()) {
      if (!(eat("&&") || eat("&") || eat("and"))) fail("expected '&' or end of input");
      t = conjoin(t, term());
    }
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(original_) + "'");
  }

  bool at_end() const { return pos_ >= s_.size(); }

  bool eat(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  int integer() {
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::vector<int> set() {
    if (!eat("{")) fail("expected '{'");
    std::vector<int> v;
    if (eat("}")) fail("empty set");
    do {
      const int lo = integer();
      int hi = lo;
      if (eat("..")) hi = integer();
      if (lo < 1 || hi < lo) fail("set members must be positive and ranges ascending");
      if (hi - lo > 10'000'000) fail("range too large");
      for (int i = lo; i <= hi; ++i) v.push_back(i);
    } while (eat(","));
    if (!eat("}")) fail("expected '}'");
    return normalise(std::move(v));
  }

  Term term() {
    if (eat("all") || eat("\xE2\x84\x95") /* U+2115 */) return tail_exclusion({false, {}});
    if (s_.compare(pos_, 1, "N") == 0) {
      ++pos_;
      return tail_exclusion({false, {}});
    }
    if (s_.compare(pos_, 1, "{") == 0) return {true, set()};
    if (!eat("n")) fail("expected 'n', 'all' or a set");
    if (eat("notin") || eat("!in")) return {false, set()};
    if (eat("in")) return {true, set()};
    if (eat("<=")) return less_equal(integer());
    if (eat(">=")) return greater_than(integer() - 1);
    if (eat("==") || eat("=")) return equal_to();
    if (eat("!=")) return not_equal_to();
    if (eat("<")) return less_equal(integer() - 1);
    if (eat(">")) return greater_than(integer());
    fail("expected a comparison operator");
  }

  // Optional "\{...}" after `all` / `N`.
  Term tail_exclusion(Term t) {
    if (eat("\\")) t.set = set();
    return t;
  }

  Term less_equal(int m) {
    if (m < 1) fail("empty subsystem");
    return {true, range(1, m)};
  }

  Term greater_than(int m) { return {false, range(1, std::max(m, 0))}; }

  Term equal_to() {
    if (s_.compare(pos_, 1, "{") == 0) return {true, set()};
    const int m = integer();
    if (m < 1) fail("indices are positive");
    return {true, {m}};
  }

  Term not_equal_to() {
    if (s_.compare(pos_, 1, "{") == 0) return {false, set()};
    const int m = integer();
    if (m < 1) fail("indices are positive");
    return {false, {m}};
  }

  std::string_view original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Subsystem::Subsystem(bool finite, std::vector<int> set) : finite_(finite), set_(std::move(set)) {}

Subsystem Subsystem::finite(std::vector<int> members) {
  members = normalise(std::move(members));
  if (members.empty()) throw std::invalid_argument("Subsystem: empty finite set");
  if (members.front() < 1) throw std::invalid_argument("Subsystem: indices must be positive");
  return Subsystem(true, std::move(members));
}

Subsystem Subsystem::cofinite(std::vector<int> excluded) {
  excluded = normalise(std::move(excluded));
  if (!excluded.empty() && excluded.front() < 1) {
    throw std::invalid_argument("Subsystem: indices must be positive");
  }
  return Subsystem(false, std::move(excluded));
}

Subsystem Subsystem::up_to(int n) { return finite(range(1, n)); }

Subsystem Subsystem::parse(std::string_view text) {
  Term t = Parser(text).parse();
  if (t.finite) {
    if (t.set.empty()) throw ParseError("specification denotes the empty subsystem: '" + std::string(text) + "'");
    return Subsystem(true, std::move(t.set));
  }
  return Subsystem(false, std::move(t.set));
}

const std::vector<int>& Subsystem::members() const {
  if (!finite_) throw std::logic_error("Subsystem::members on a cofinite subsystem");
  return set_;
}

const std::vector<int>& Subsystem::excluded() const {
  if (finite_) throw std::logic_error("Subsystem::excluded on a finite subsystem");
  return set_;
}

bool Subsystem::contains(int n) const {
  if (n < 1) return false;
  const bool listed = std::binary_search(set_.begin(), set_.end(), n);
  return finite_ ? listed : !listed;
}

int Subsystem::max_index() const noexcept { return set_.empty() ? 0 : set_.back(); }

int Subsystem::min_index() const {
  if (finite_) return set_.front();
  int n = 1;
  while (std::binary_search(set_.begin(), set_.end(), n)) ++n;
  return n;
}

std::vector<int> Subsystem::members_up_to(int limit) const {
  std::vector<int> out;
  if (finite_) {
    for (int n : set_) {
      if (n <= limit) out.push_back(n);
    }
  } else {
    for (int n = 1; n <= limit; ++n) {
      if (contains(n)) out.push_back(n);
    }
  }
  return out;
}

Subsystem Subsystem::truncated(int limit) const { return finite(members_up_to(limit)); }

std::size_t Subsystem::finite_size() const { return members().size(); }

bool Subsystem::subset_of(const Subsystem& other) const {
  if (finite_) {
    return std::all_of(set_.begin(), set_.end(), [&](int n) { return other.contains(n); });
  }
  if (other.finite_) return false;
  return std::includes(set_.begin(), set_.end(), other.set_.begin(), other.set_.end());
}

bool Subsystem::all_greater_than(int m) const {
  if (finite_) return set_.front() > m;
  for (int n = 1; n <= m; ++n) {
    if (contains(n)) return false;
  }
  return true;
}

std::string Subsystem::to_string() const {
  if (finite_) {
    if (is_prefix_range(set_)) return "n<=" + std::to_string(set_.back());
    return "n in " + format_set(set_);
  }
  if (set_.empty()) return "all";
  if (is_prefix_range(set_)) return "n>" + std::to_string(set_.back());
  return "n!=" + format_set(set_);
}

}  // namespace gasket
