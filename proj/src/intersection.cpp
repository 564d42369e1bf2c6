#include "crossfam/intersection.hpp"

#include <stdexcept>
#include <string>

#include "crossfam/bigcount.hpp"

namespace crossfam {

namespace {

void check_t(int t) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
}

}

std::optional<std::pair<ElementSet, ElementSet>>
find_t_violation(const Family& f, int t) {
  check_t(t);
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = x + 1; y < f.size(); ++y)
      if (f[x].intersection_size(f[y]) < t) return {{f[x], f[y]}};
  return std::nullopt;
}

bool is_t_intersecting(const Family& f, int t) {
  return !find_t_violation(f, t).has_value();
}

std::optional<std::pair<ElementSet, ElementSet>>
find_cross_violation(const Family& a, const Family& b, int t) {
  check_t(t);
  if (a.universe_size() != b.universe_size())
    throw std::invalid_argument("universe mismatch between families");
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.intersection_size(y) < t) return {{x, y}};
  return std::nullopt;
}

bool is_cross_t_intersecting(const Family& a, const Family& b, int t) {
  return !find_cross_violation(a, b, t).has_value();
}

bool is_cross_t_intersecting(std::span<const Family> families, int t) {
  if (families.size() < 2)
    throw std::invalid_argument("need at least two families");
  for (std::size_t x = 0; x < families.size(); ++x)
    for (std::size_t y = x + 1; y < families.size(); ++y)
      if (!is_cross_t_intersecting(families[x], families[y], t)) return false;
  return true;
}

Family star(int n, int r, const ElementSet& t_set) {
  if (t_set.universe_size() != n)
    throw std::invalid_argument("core universe does not match n");
  const int t = t_set.cardinality();
  if (!(t <= r && r <= n))
    throw std::invalid_argument("need |T| <= r <= n");
  std::vector<int> pool = t_set.complement().elements();
  std::vector<ElementSet> sets;
  for_each_subset_of_size(pool, r - t, [&](const std::vector<int>& combo) {
    ElementSet member = t_set;
    for (int e : combo) member = member.with(e);
    sets.push_back(member);
  });
  return Family(n, std::move(sets));
}

namespace {

// A uniform family of size C(n-t, r-t) whose member intersection I has
// |I| >= t equals star(n, r, T) for exactly the t-subsets T of I, since
// every member contains I and the sizes match.
std::optional<ElementSet> star_core_intersection(const Family& f, int t) {
  if (f.empty()) return std::nullopt;
  auto r = f.uniformity();
  if (!r) throw std::invalid_argument("family is not uniform");
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  if (t > *r) return std::nullopt;
  const int n = f.universe_size();
  if (binomial(static_cast<unsigned>(n - t), static_cast<unsigned>(*r - t)) !=
      BigCount(f.size()))
    return std::nullopt;
  ElementSet common = f[0];
  for (std::size_t i = 1; i < f.size(); ++i) common = common.intersect(f[i]);
  if (common.cardinality() < t) return std::nullopt;
  return common;
}

}

std::optional<ElementSet> recognize_star(const Family& f, int t) {
  auto common = star_core_intersection(f, t);
  if (!common) return std::nullopt;
  // canonically first t-subset = the t smallest elements of the intersection
  std::vector<int> elems = common->elements();
  elems.resize(static_cast<std::size_t>(t));
  return ElementSet(f.universe_size(), elems);
}

std::vector<ElementSet> all_star_roots(const Family& f, int t) {
  std::vector<ElementSet> roots;
  auto common = star_core_intersection(f, t);
  if (!common) return roots;
  for_each_subset_of_size(common->elements(), t, [&](const std::vector<int>& combo) {
    roots.emplace_back(f.universe_size(), combo);
  });
  return roots;
}

std::optional<ElementSet> common_star_root(std::span<const Family> families,
                                           int t) {
  if (families.empty()) return std::nullopt;
  const int n = families.front().universe_size();
  ElementSet common(n);
  bool first = true;
  for (const auto& f : families) {
    if (f.universe_size() != n)
      throw std::invalid_argument("universe mismatch between families");
    if (f.empty()) return std::nullopt;
    auto r = f.uniformity();
    if (!r) return std::nullopt;
    if (t > *r) return std::nullopt;
    if (binomial(static_cast<unsigned>(n - t), static_cast<unsigned>(*r - t)) !=
        BigCount(f.size()))
      return std::nullopt;
    for (const auto& member : f)
      common = first ? (first = false, member) : common.intersect(member);
  }
  if (common.cardinality() < t) return std::nullopt;
  std::vector<int> elems = common.elements();
  elems.resize(static_cast<std::size_t>(t));
  return ElementSet(n, elems);
}

Family compatible_family(const Family& a, int s, int t) {
  const int n = a.universe_size();
  if (!(1 <= t && t <= s && s <= n))
    throw std::invalid_argument("need 1 <= t <= s <= n");
  if (!a.empty()) {
    auto r = a.uniformity();
    if (!r) throw std::invalid_argument("family is not uniform");
    if (!(t <= *r && *r <= s))
      throw std::invalid_argument("need t <= r <= s");
  }
  Family layer = generate_uniform(n, s);
  std::vector<ElementSet> out;
  for (const auto& b : layer) {
    bool ok = true;
    for (const auto& x : a)
      if (b.intersection_size(x) < t) {
        ok = false;
        break;
      }
    if (ok) out.push_back(b);
  }
  return Family(n, std::move(out));
}

}
