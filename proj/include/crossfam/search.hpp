#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossfam/bigcount.hpp"
#include "crossfam/bounds.hpp"
#include "crossfam/family.hpp"
#include "crossfam/params.hpp"

namespace crossfam {

enum class SearchMode { brute, closure, compressed };

const char* to_string(SearchMode m);
std::optional<SearchMode> search_mode_from_string(const std::string& s);

/// Raised when an instance exceeds a size guard; the search refuses rather
/// than run without bound.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchLimits {
  /// brute: refuse when C(n, r) exceeds this (subset enumeration).
  std::uint64_t brute_layer_guard = 12;
  /// closure/compressed: refuse when C(n, r) exceeds this.
  std::uint64_t bnb_layer_guard = 40;
  /// any mode: refuse when C(n, s) exceeds this (the s-layer is materialized).
  std::uint64_t layer_materialize_guard = 1000000;
  /// k-ary: refuse when the product of layer sizes exceeds this.
  std::uint64_t k_layer_product_guard = 4096;
  /// k-ary: refuse when the enumerated layers carry more subset bits than this.
  int k_enumeration_bits_guard = 30;
  int threads = 1;
  /// Also visit empty first families. They report product 0 and can never win,
  /// so this only exists for completeness.
  bool include_empty = false;
};

inline constexpr std::size_t kWitnessCap = 10000;

/// One optimal tuple: the families, plus their common star core when the
/// tuple is a star tuple.
struct SearchWitness {
  std::vector<Family> families;
  std::optional<ElementSet> common_root;
};

struct SearchReport {
  SearchMode mode = SearchMode::brute;
  BigCount optimum;
  /// Canonically ordered; truncated to kWitnessCap entries.
  std::vector<SearchWitness> witnesses;
  std::uint64_t witness_total = 0;
  bool witnesses_truncated = false;
  /// Over every optimal tuple found. brute and closure modes enumerate all
  /// optimal tuples; compressed mode only sees left-compressed first
  /// families, so there this covers just those.
  bool all_witnesses_are_star_tuples = false;
  std::uint64_t nodes_explored = 0;
};

/// Exhaustive: every nonempty A ⊆ C([n], r) with B = compatible_family(A).
/// Taking B as the full compatible family loses nothing, so this is exact,
/// and every optimal pair is enumerated.
SearchReport max_product_brute(const Params& p, const SearchLimits& lim = {});

/// Branch and bound over subsets of C([n], r) in canonical candidate order,
/// upper bound (|A| + remaining) * |compatible(A)|, pruned strictly against
/// the star-pair product (a feasible lower bound), so all ties survive.
/// closure explores every A; compressed restricts A to left-compressed
/// candidates, which preserves the optimum but not witness completeness.
SearchReport max_product_bnb(const Params& p, SearchMode mode,
                             const SearchLimits& lim = {});

/// Exact k-ary optimum: enumerates the first k-1 families over running
/// compatibility pools and closes the last one. Tiny instances only.
SearchReport max_product_k(int n, const std::vector<int>& uniformities, int t,
                           const SearchLimits& lim = {});

struct TheoremVerdict {
  Params params;
  SearchMode mode = SearchMode::brute;
  BigCount optimum;
  BigCount bound;
  bool bound_holds = false;
  bool bound_tight = false;
  /// Every optimal tuple is a star tuple on a common core. Absent in
  /// compressed mode, which cannot see all witnesses.
  std::optional<bool> uniqueness;
  bool threshold_applicable = false;
  SearchReport report;
};

/// Runs the requested search and compares against the star product bound.
/// k-ary params always go through max_product_k.
TheoremVerdict verify_theorem(const Params& p, SearchMode mode,
                              const SearchLimits& lim = {});

}
