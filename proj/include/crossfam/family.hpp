#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crossfam/element_set.hpp"

namespace crossfam {

/// A finite family of subsets of one universe [n].
///
/// Always deduplicated and held in canonical order (cardinality, then
/// lexicographic on ascending elements), so equality is memberwise equality
/// and iteration order is reproducible. Immutable after construction.
class Family {
public:
  explicit Family(int universe_size);

  /// Canonicalizes: sorts, removes duplicates. Every set must live in the
  /// same universe.
  Family(int universe_size, std::vector<ElementSet> sets);

  int universe_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }

  const ElementSet& operator[](std::size_t i) const { return sets_[i]; }
  std::vector<ElementSet>::const_iterator begin() const { return sets_.begin(); }
  std::vector<ElementSet>::const_iterator end() const { return sets_.end(); }
  const std::vector<ElementSet>& sets() const noexcept { return sets_; }

  bool contains(const ElementSet& s) const;

  /// r such that every member has cardinality r. Absent for the empty family
  /// and for mixed-cardinality families.
  std::optional<int> uniformity() const noexcept { return uniformity_; }

  bool operator==(const Family& other) const {
    return n_ == other.n_ && sets_ == other.sets_;
  }

  friend std::strong_ordering canonical_order(const Family& a, const Family& b);
  friend bool canonical_less(const Family& a, const Family& b) {
    return canonical_order(a, b) == std::strong_ordering::less;
  }

private:
  int n_;
  std::vector<ElementSet> sets_;
  std::optional<int> uniformity_;
};

/// The full layer: every r-element subset of [n], canonically ordered.
/// r = 0 yields the one-member family {{}}. Rejects r < 0, r > n.
Family generate_uniform(int n, int r);

/// Calls fn for each k-subset of pool, as ascending index lists into the
/// given pool order. Lexicographic over positions.
void for_each_subset_of_size(const std::vector<int>& pool, int k,
                             const std::function<void(const std::vector<int>&)>& fn);

/// Error raised by read_family, carrying the 1-based offending line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

/// Text format: one set per line; elements are base-10 integers separated by
/// spaces and/or commas, in any order; '#' starts a comment running to the
/// end of the line; blank lines are skipped. The universe size is not part
/// of the format and must be supplied.
Family read_family(std::string_view text, int universe_size);

/// Canonical form: one set per line, ascending elements, space separated.
/// Throws std::domain_error if the family contains the empty set, which the
/// format cannot represent.
std::string write_family(const Family& f);

}
