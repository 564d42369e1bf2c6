#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "crossfam/bounds.hpp"

using namespace crossfam;

namespace {

// additive binomial, independent of the library's multiplicative one
BigCount pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<BigCount> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigCount> next(m + 1, 1);
    for (int i = 1; i < m; ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  return row[k];
}

}  // namespace

TEST_CASE("threshold equals its closed form") {
  CHECK(n0_threshold(1, 1, 1) == 2);
  CHECK(n0_threshold(2, 2, 1) == 8);
  CHECK(n0_threshold(2, 3, 2) == 9);
  CHECK(n0_threshold(1, 2, 1) == 4);
  CHECK(n0_threshold(2, 2, 2) == 3);

  for (int t = 1; t <= 6; ++t)
    for (int r = t; r <= 6; ++r)
      for (int s = r; s <= 6; ++s) {
        BigCount first = BigCount(r) * (s - t) * pascal(r + s - t, t);
        BigCount second =
            BigCount(r - t) * pascal(r, t) * pascal(r + s - t, t + 1);
        BigCount expected = (first > second ? first : second) + t + 1;
        CHECK(n0_threshold(r, s, t) == expected);
      }

  CHECK_THROWS_AS(n0_threshold(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(n0_threshold(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(n0_threshold(1, 2, 2), std::invalid_argument);
}

TEST_CASE("pair bound") {
  CHECK(pair_bound(Params(4, 1, 2, 1)) == 3);
  CHECK(pair_bound(Params(8, 2, 2, 1)) == 49);
  CHECK(pair_bound(Params(3, 2, 2, 2)) == 1);

  for (int t = 1; t <= 4; ++t)
    for (int r = t; r <= 5; ++r)
      for (int s = r; s <= 5; ++s)
        for (int n = s; n <= 12; ++n)
          CHECK(pair_bound(Params(n, r, s, t)) ==
                pascal(n - t, r - t) * pascal(n - t, s - t));
}

TEST_CASE("k bound") {
  CHECK(k_bound(5, {1, 1, 2}, 1) == 4);
  CHECK(k_bound(6, {2, 2, 2}, 1) == 125);
  CHECK(k_bound(4, {2, 2}, 2) == 1);

  // the pair form is the k = 2 special case
  for (int t = 1; t <= 3; ++t)
    for (int r = t; r <= 4; ++r)
      for (int s = r; s <= 4; ++s)
        for (int n = s; n <= 9; ++n)
          CHECK(k_bound(n, {r, s}, t) == pair_bound(Params(n, r, s, t)));

  // and the k-ary Params route delegates to it
  CHECK(pair_bound(Params(5, std::vector<int>{1, 1, 2}, 1)) == 4);

  CHECK_THROWS_AS(k_bound(4, {2, 5}, 1), std::invalid_argument);  // r > n
  CHECK_THROWS_AS(k_bound(4, {1, 2}, 2), std::invalid_argument);  // t > r1
  CHECK_THROWS_AS(k_bound(4, {2, 2}, 0), std::invalid_argument);
}

TEST_CASE("threshold applicability") {
  CHECK(threshold_applicable(Params(2, 1, 1, 1)));
  CHECK_FALSE(threshold_applicable(Params(7, 2, 2, 1)));
  CHECK(threshold_applicable(Params(8, 2, 2, 1)));  // boundary is inclusive
  CHECK(threshold_applicable(Params(9, 2, 3, 2)));

  // k-ary form uses the two largest uniformities
  CHECK(threshold_applicable(Params(9, std::vector<int>{1, 2, 3}, 1)) ==
        (BigCount(9) >= n0_threshold(2, 3, 1)));
}
