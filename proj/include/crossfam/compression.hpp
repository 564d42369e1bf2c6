#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "crossfam/bigcount.hpp"
#include "crossfam/family.hpp"

namespace crossfam {

/// Index pair of an element compression: occurrences of j are replaced by i
/// where that keeps the set a set. i < j makes it a left compression.
/// Requires i, j in [n], i != j.
struct CompressionIndex {
  int i;
  int j;
  bool operator==(const CompressionIndex&) const = default;
};

inline bool is_left(CompressionIndex idx) { return idx.i < idx.j; }

/// Set-level compression: if j is in a and i is not, swap j for i;
/// otherwise the set is returned unchanged.
ElementSet compress_set(const ElementSet& a, CompressionIndex idx);

/// Family-level compression. A member whose compressed image already lies in
/// the family (or is itself) stays; otherwise it is replaced by its image.
/// Preserves the family size and memberwise cardinalities.
Family compress_family(const Family& f, CompressionIndex idx);

/// Sum over members of the sum of their elements. Strictly drops whenever a
/// left compression changes the family, which bounds every fixpoint loop.
BigCount family_potential(const Family& f);

/// Lexicographically first (i, j), i < j, whose compression changes f.
/// Absent exactly when f is left-compressed.
std::optional<CompressionIndex> first_changing_left_index(const Family& f);

bool is_left_compressed(const Family& f);

struct CompressionStep {
  CompressionIndex index;
  bool changed_a;
  bool changed_b;  // always false for the single-family driver
};

/// Steps record only applications that changed something. Potentials cover
/// the one family for the single driver and the sum of both for the pair
/// driver. sweeps counts scans over the index pairs, including the final
/// clean one, so sweeps == steps.size() + 1.
struct CompressionTrace {
  std::vector<CompressionStep> steps;
  int sweeps = 0;
  BigCount initial_potential;
  BigCount final_potential;
};

/// Applies left compressions in lexicographic (i, j) order, restarting from
/// the first pair after every change, until a full scan changes nothing.
std::pair<Family, CompressionTrace> compress_to_fixpoint(const Family& f);

/// Same sweep discipline over two families at once: at each index the
/// compression is applied to both, and the scan restarts if either changed.
std::tuple<Family, Family, CompressionTrace>
compress_pair_to_fixpoint(const Family& a, const Family& b);

}
