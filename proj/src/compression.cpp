#include "crossfam/compression.hpp"

#include <stdexcept>
#include <string>

namespace crossfam {

namespace {

void check_index(int n, CompressionIndex idx) {
  if (idx.i < 1 || idx.i > n || idx.j < 1 || idx.j > n)
    throw std::out_of_range("compression index (" + std::to_string(idx.i) +
                            "," + std::to_string(idx.j) +
                            ") outside universe [1, " + std::to_string(n) + "]");
  if (idx.i == idx.j)
    throw std::invalid_argument("compression index needs i != j");
}

}

ElementSet compress_set(const ElementSet& a, CompressionIndex idx) {
  check_index(a.universe_size(), idx);
  if (a.contains(idx.j) && !a.contains(idx.i))
    return a.without(idx.j).with(idx.i);
  return a;
}

Family compress_family(const Family& f, CompressionIndex idx) {
  check_index(f.universe_size(), idx);
  std::vector<ElementSet> out;
  out.reserve(f.size());
  for (const auto& s : f) {
    ElementSet image = compress_set(s, idx);
    if (image == s || f.contains(image))
      out.push_back(s);
    else
      out.push_back(image);
  }
  return Family(f.universe_size(), std::move(out));
}

BigCount family_potential(const Family& f) {
  BigCount total = 0;
  for (const auto& s : f) {
    long long member = 0;
    for (int e : s.elements()) member += e;
    total += member;
  }
  return total;
}

namespace {

// The compression at (i, j) changes f exactly when some member's image
// escapes the family.
bool changes_under(const Family& f, CompressionIndex idx) {
  for (const auto& s : f)
    if (s.contains(idx.j) && !s.contains(idx.i) &&
        !f.contains(s.without(idx.j).with(idx.i)))
      return true;
  return false;
}

}

std::optional<CompressionIndex> first_changing_left_index(const Family& f) {
  const int n = f.universe_size();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (changes_under(f, CompressionIndex{i, j}))
        return CompressionIndex{i, j};
  return std::nullopt;
}

bool is_left_compressed(const Family& f) {
  return !first_changing_left_index(f).has_value();
}

std::pair<Family, CompressionTrace> compress_to_fixpoint(const Family& f) {
  CompressionTrace trace;
  trace.initial_potential = family_potential(f);
  Family current = f;
  int scans = 0;
  for (;;) {
    ++scans;
    auto idx = first_changing_left_index(current);
    if (!idx) break;
    current = compress_family(current, *idx);
    trace.steps.push_back(CompressionStep{*idx, true, false});
  }
  trace.sweeps = scans;
  trace.final_potential = family_potential(current);
  return {std::move(current), std::move(trace)};
}

std::tuple<Family, Family, CompressionTrace>
compress_pair_to_fixpoint(const Family& a, const Family& b) {
  if (a.universe_size() != b.universe_size())
    throw std::invalid_argument("universe mismatch between families");
  const int n = a.universe_size();
  CompressionTrace trace;
  trace.initial_potential = family_potential(a) + family_potential(b);
  Family fa = a, fb = b;
  int scans = 0;
  for (;;) {
    ++scans;
    std::optional<CompressionIndex> found;
    for (int i = 1; i < n && !found; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CompressionIndex idx{i, j};
        if (changes_under(fa, idx) || changes_under(fb, idx)) {
          found = idx;
          break;
        }
      }
    if (!found) break;
    Family na = compress_family(fa, *found);
    Family nb = compress_family(fb, *found);
    trace.steps.push_back(CompressionStep{*found, na != fa, nb != fb});
    fa = std::move(na);
    fb = std::move(nb);
  }
  trace.sweeps = scans;
  trace.final_potential = family_potential(fa) + family_potential(fb);
  return {std::move(fa), std::move(fb), std::move(trace)};
}

}
