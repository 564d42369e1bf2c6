#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

/// First pair of distinct members meeting in fewer than t elements, if any.
std::optional<std::pair<ElementSet, ElementSet>>
find_t_violation(const Family& f, int t);

bool is_t_intersecting(const Family& f, int t);

/// First (A, B) with A in a, B in b and |A ∩ B| < t, if any.
std::optional<std::pair<ElementSet, ElementSet>>
find_cross_violation(const Family& a, const Family& b, int t);

bool is_cross_t_intersecting(const Family& a, const Family& b, int t);

/// Every unordered pair of distinct families must be cross-t-intersecting.
/// Requires at least two families. Empty members make their pairs vacuous.
bool is_cross_t_intersecting(std::span<const Family> families, int t);

/// All r-sets containing the core T: {A in C([n], r) : T ⊆ A}.
/// Requires |T| <= r <= n.
Family star(int n, int r, const ElementSet& t_set);

/// If f equals star(n, r, T) for some t-element T, returns such a T (the
/// canonically first when several work). Requires f uniform; empty f or
/// t > r yield nullopt.
std::optional<ElementSet> recognize_star(const Family& f, int t);

/// Every t-element T with f == star(n, r, T), canonical order.
std::vector<ElementSet> all_star_roots(const Family& f, int t);

/// A common t-element core T with families[i] == star(n, r_i, T) for all i,
/// if one exists.
std::optional<ElementSet> common_star_root(std::span<const Family> families,
                                           int t);

/// {B in C([n], s) : |B ∩ A| >= t for every A in a}. Equals the whole layer
/// when a is empty. a must be uniform (of some size r with t <= r <= s)
/// unless empty; requires 1 <= t <= s <= n.
Family compatible_family(const Family& a, int s, int t);

}
