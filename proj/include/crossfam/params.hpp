#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossfam {

/// Instance parameters. Pair form: (n, r, s, t) with 1 <= t <= r <= s <= n.
/// k-ary form: (n, r_1..r_k, t), k >= 2; the uniformity list is kept sorted
/// ascending (the problem is symmetric in it) and must satisfy
/// 1 <= t <= r_1, r_k <= n.
struct Params {
  int n = 0;
  int r = 0;
  int s = 0;
  int t = 0;
  std::vector<int> uniformities;  // empty in the pair form

  Params(int n_, int r_, int s_, int t_);
  Params(int n_, std::vector<int> rs, int t_);

  bool is_k_ary() const noexcept { return !uniformities.empty(); }
  int k() const noexcept {
    return is_k_ary() ? static_cast<int>(uniformities.size()) : 2;
  }

  /// The two largest uniformities, ascending; governs the threshold test.
  std::pair<int, int> top_two() const;
};

}
