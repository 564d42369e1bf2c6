#include "crossfam/family.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace crossfam {

Family::Family(int universe_size) : n_(universe_size) {
  if (universe_size < 1 || universe_size > kMaxUniverse)
    throw std::invalid_argument("universe size must be in [1, 128], got " +
                                std::to_string(universe_size));
}

Family::Family(int universe_size, std::vector<ElementSet> sets)
    : Family(universe_size) {
  for (const auto& s : sets)
    if (s.universe_size() != n_)
      throw std::invalid_argument("family member universe " +
                                  std::to_string(s.universe_size()) +
                                  " does not match family universe " +
                                  std::to_string(n_));
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    return canonical_less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
  if (!sets_.empty()) {
    int r = sets_.front().cardinality();
    bool uniform = std::all_of(sets_.begin(), sets_.end(), [&](const ElementSet& s) {
      return s.cardinality() == r;
    });
    if (uniform) uniformity_ = r;
  }
}

bool Family::contains(const ElementSet& s) const {
  if (s.universe_size() != n_) return false;
  return std::binary_search(sets_.begin(), sets_.end(), s,
                            [](const ElementSet& a, const ElementSet& b) {
                              return canonical_less(a, b);
                            });
}

std::strong_ordering canonical_order(const Family& a, const Family& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("universe mismatch between families");
  return std::lexicographical_compare_three_way(
      a.sets_.begin(), a.sets_.end(), b.sets_.begin(), b.sets_.end(),
      [](const ElementSet& x, const ElementSet& y) {
        return canonical_order(x, y);
      });
}

void for_each_subset_of_size(const std::vector<int>& pool, int k,
                             const std::function<void(const std::vector<int>&)>& fn) {
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> chosen(static_cast<std::size_t>(k));
  for (;;) {
    for (int i = 0; i < k; ++i)
      chosen[static_cast<std::size_t>(i)] =
          pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    fn(chosen);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

Family generate_uniform(int n, int r) {
  if (n < 1 || n > kMaxUniverse)
    throw std::invalid_argument("universe size must be in [1, 128], got " +
                                std::to_string(n));
  if (r < 0 || r > n)
    throw std::invalid_argument("layer size " + std::to_string(r) +
                                " outside [0, " + std::to_string(n) + "]");
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<ElementSet> sets;
  for_each_subset_of_size(pool, r, [&](const std::vector<int>& combo) {
    sets.emplace_back(n, combo);
  });
  return Family(n, std::move(sets));
}

Family read_family(std::string_view text, int universe_size) {
  if (universe_size < 1 || universe_size > kMaxUniverse)
    throw std::invalid_argument("universe size must be in [1, 128], got " +
                                std::to_string(universe_size));
  std::vector<ElementSet> sets;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    for (char& ch : line)
      if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
    std::istringstream tokens(line);
    std::string tok;
    ElementSet current(universe_size);
    bool any = false;
    while (tokens >> tok) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "malformed element '" + tok + "'");
      if (value < 1 || value > universe_size)
        throw ParseError(line_no, "element " + std::to_string(value) +
                                      " outside universe [1, " +
                                      std::to_string(universe_size) + "]");
      if (current.contains(value))
        throw ParseError(line_no,
                         "duplicate element " + std::to_string(value) +
                             " in one set");
      current = current.with(value);
      any = true;
    }
    if (any) sets.push_back(current);
  }
  return Family(universe_size, std::move(sets));
}

std::string write_family(const Family& f) {
  std::string out;
  for (const auto& s : f) {
    if (s.empty())
      throw std::domain_error(
          "the empty set has no line representation in the family format");
    bool first = true;
    for (int e : s.elements()) {
      if (!first) out += ' ';
      out += std::to_string(e);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}
