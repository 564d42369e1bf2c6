#include "crossfam/bounds.hpp"

#include <stdexcept>

namespace crossfam {

BigCount n0_threshold(int r, int s, int t) {
  if (!(1 <= t && t <= r && r <= s))
    throw std::invalid_argument("need 1 <= t <= r <= s");
  const unsigned window = static_cast<unsigned>(r + s - t);
  BigCount first = BigCount(r) * (s - t) * binomial(window, static_cast<unsigned>(t));
  BigCount second = BigCount(r - t) *
                    binomial(static_cast<unsigned>(r), static_cast<unsigned>(t)) *
                    binomial(window, static_cast<unsigned>(t + 1));
  BigCount best = first > second ? first : second;
  return best + t + 1;
}

BigCount pair_bound(const Params& p) {
  if (p.is_k_ary()) return k_bound(p.n, p.uniformities, p.t);
  return binomial(static_cast<unsigned>(p.n - p.t), static_cast<unsigned>(p.r - p.t)) *
         binomial(static_cast<unsigned>(p.n - p.t), static_cast<unsigned>(p.s - p.t));
}

BigCount k_bound(int n, const std::vector<int>& uniformities, int t) {
  if (uniformities.size() < 2)
    throw std::invalid_argument("need at least two uniformities");
  if (t < 1) throw std::invalid_argument("need t >= 1");
  BigCount product = 1;
  for (int r : uniformities) {
    if (!(t <= r && r <= n))
      throw std::invalid_argument("need t <= r_i <= n for every uniformity");
    product *= binomial(static_cast<unsigned>(n - t), static_cast<unsigned>(r - t));
  }
  return product;
}

bool threshold_applicable(const Params& p) {
  auto [a, b] = p.top_two();
  return BigCount(p.n) >= n0_threshold(a, b, p.t);
}

}
