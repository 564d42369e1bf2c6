#include "crossfam/params.hpp"

#include <algorithm>

namespace crossfam {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument(what);
}

}

Params::Params(int n_, int r_, int s_, int t_) : n(n_), r(r_), s(s_), t(t_) {
  if (!(1 <= t && t <= r && r <= s && s <= n))
    reject("need 1 <= t <= r <= s <= n, got t=" + std::to_string(t) +
           " r=" + std::to_string(r) + " s=" + std::to_string(s) +
           " n=" + std::to_string(n));
}

Params::Params(int n_, std::vector<int> rs, int t_)
    : n(n_), t(t_), uniformities(std::move(rs)) {
  if (uniformities.size() < 2) reject("need at least two uniformities");
  std::sort(uniformities.begin(), uniformities.end());
  if (!(1 <= t && t <= uniformities.front() && uniformities.back() <= n))
    reject("need 1 <= t <= min uniformity and max uniformity <= n");
  r = uniformities[uniformities.size() - 2];
  s = uniformities.back();
}

std::pair<int, int> Params::top_two() const {
  if (!is_k_ary()) return {r, s};
  return {uniformities[uniformities.size() - 2], uniformities.back()};
}

}
