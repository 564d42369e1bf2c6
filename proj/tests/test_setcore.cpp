#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "crossfam/bigcount.hpp"
#include "crossfam/element_set.hpp"
#include "crossfam/family.hpp"
#include "crossfam/params.hpp"
#include "crossfam/version.hpp"

using namespace crossfam;

TEST_CASE("binomial against an additive Pascal table") {
  // independent recurrence: C(n,k) = C(n-1,k-1) + C(n-1,k)
  const int limit = 40;
  std::vector<std::vector<BigCount>> pascal(limit + 1);
  for (int n = 0; n <= limit; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k)
      pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (int n = 0; n <= limit; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == pascal[n][k]);
}

TEST_CASE("binomial edge values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 7) == 1);
  // wide enough to overflow 64 bits
  CHECK(to_decimal(binomial(128, 64)) ==
        "23951146041928082866135587776380551750");
}

TEST_CASE("to_decimal") {
  CHECK(to_decimal(BigCount(0)) == "0");
  CHECK(to_decimal(BigCount(49)) == "49");
}

TEST_CASE("element set construction and access") {
  ElementSet s(5, {3, 1});
  CHECK(s.universe_size() == 5);
  CHECK(s.cardinality() == 2);
  CHECK(s.contains(1));
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.elements() == std::vector<int>{1, 3});
  CHECK(s.to_string() == "{1,3}");

  ElementSet empty(4);
  CHECK(empty.empty());
  CHECK(empty.cardinality() == 0);
  CHECK(empty.elements().empty());

  CHECK_THROWS_AS(ElementSet(0), std::invalid_argument);
  CHECK_THROWS_AS(ElementSet(kMaxUniverse + 1), std::invalid_argument);
  CHECK_THROWS_AS(ElementSet(3, {4}), std::out_of_range);
  CHECK_THROWS_AS(ElementSet(3, {0}), std::out_of_range);
}

TEST_CASE("element set operations") {
  ElementSet s(6, {2, 4});
  CHECK(s.with(1) == ElementSet(6, {1, 2, 4}));
  CHECK(s.with(2) == s);
  CHECK(s.without(4) == ElementSet(6, {2}));
  CHECK(s.without(5) == s);
  CHECK_THROWS_AS(s.with(7), std::out_of_range);

  ElementSet a(6, {1, 2, 3});
  ElementSet b(6, {2, 3, 5});
  CHECK(a.intersection_size(b) == 2);
  CHECK(a.intersect(b) == ElementSet(6, {2, 3}));
  CHECK(a.unite(b) == ElementSet(6, {1, 2, 3, 5}));
  CHECK(ElementSet(6, {2, 3}).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.complement() == ElementSet(6, {4, 5, 6}));

  CHECK(ElementSet::prefix(6, 3) == ElementSet(6, {1, 2, 3}));
  CHECK(ElementSet::prefix(6, 0) == ElementSet(6));
  CHECK(ElementSet::prefix(6, 9) == ElementSet(6, {1, 2, 3, 4, 5, 6}));

  // universes above one word exercise the second limb
  ElementSet wide(128, {1, 64, 65, 128});
  CHECK(wide.cardinality() == 4);
  CHECK(wide.contains(65));
  CHECK(wide.without(64).elements() == std::vector<int>{1, 65, 128});
  CHECK(wide.complement().cardinality() == 124);
}

TEST_CASE("canonical order sorts by cardinality then ascending elements") {
  ElementSet a(5, {1, 4});
  ElementSet b(5, {2, 3});
  CHECK(canonical_less(a, b));
  CHECK(canonical_less(ElementSet(5, {5}), a));
  CHECK(canonical_order(a, a) == std::strong_ordering::equal);
  CHECK_THROWS_AS(canonical_order(ElementSet(4, {1}), ElementSet(5, {1})),
                  std::invalid_argument);

  // oracle: (cardinality, sorted element list) compared lexicographically
  std::mt19937_64 rng(7);
  std::vector<ElementSet> sets;
  for (int c = 0; c < 300; ++c) {
    ElementSet s(70);
    int members = static_cast<int>(rng() % 6);
    for (int m = 0; m < members; ++m)
      s = s.with(1 + static_cast<int>(rng() % 70));
    sets.push_back(s);
  }
  auto key = [](const ElementSet& s) {
    return std::make_pair(s.cardinality(), s.elements());
  };
  for (const auto& x : sets)
    for (const auto& y : sets) {
      CHECK(canonical_less(x, y) == (key(x) < key(y)));
    }
}

TEST_CASE("family canonicalizes, deduplicates, and reports uniformity") {
  Family f(4, {ElementSet(4, {3, 4}), ElementSet(4, {1, 2}),
               ElementSet(4, {3, 4})});
  CHECK(f.size() == 2);
  CHECK(f[0] == ElementSet(4, {1, 2}));
  CHECK(f[1] == ElementSet(4, {3, 4}));
  CHECK(f.uniformity() == 2);
  CHECK(f.contains(ElementSet(4, {3, 4})));
  CHECK_FALSE(f.contains(ElementSet(4, {1, 3})));

  Family mixed(4, {ElementSet(4, {1}), ElementSet(4, {1, 2})});
  CHECK_FALSE(mixed.uniformity().has_value());

  Family empty(4);
  CHECK(empty.empty());
  CHECK_FALSE(empty.uniformity().has_value());

  CHECK_THROWS_AS(Family(4, {ElementSet(5, {1})}), std::invalid_argument);

  Family g(4, {ElementSet(4, {1, 2}), ElementSet(4, {3, 4})});
  CHECK(f == g);
  Family h(4, {ElementSet(4, {1, 2})});
  CHECK(canonical_less(h, f));
  CHECK_FALSE(canonical_less(f, h));
}

TEST_CASE("generate_uniform") {
  for (int n = 1; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      Family layer = generate_uniform(n, r);
      CHECK(BigCount(layer.size()) == binomial(n, r));
      std::set<std::vector<int>> seen;
      for (const auto& s : layer) {
        CHECK(s.cardinality() == r);
        seen.insert(s.elements());
      }
      CHECK(seen.size() == layer.size());
      CHECK(std::is_sorted(layer.begin(), layer.end(),
                           [](const ElementSet& a, const ElementSet& b) {
                             return canonical_less(a, b);
                           }));
    }
  CHECK(generate_uniform(3, 0).size() == 1);
  CHECK(generate_uniform(3, 0)[0].empty());
  CHECK_THROWS_AS(generate_uniform(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(generate_uniform(3, -1), std::invalid_argument);
}

TEST_CASE("for_each_subset_of_size walks index combinations in order") {
  std::vector<int> pool{10, 20, 30, 40, 50};
  std::vector<std::vector<int>> seen;
  for_each_subset_of_size(pool, 2,
                          [&](const std::vector<int>& c) { seen.push_back(c); });
  CHECK(seen.size() == 10);
  CHECK(seen.front() == std::vector<int>{10, 20});
  CHECK(seen.back() == std::vector<int>{40, 50});
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  int count = 0;
  for_each_subset_of_size(pool, 0, [&](const std::vector<int>& c) {
    CHECK(c.empty());
    ++count;
  });
  CHECK(count == 1);
  for_each_subset_of_size(pool, 6, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 1);
}

TEST_CASE("read_family handles separators, comments, and blank lines") {
  Family f = read_family("2 1\n# full comment\n\n3,4 # tail\n\t2\t3\n", 4);
  Family want(4, {ElementSet(4, {1, 2}), ElementSet(4, {3, 4}),
                  ElementSet(4, {2, 3})});
  CHECK(f == want);

  CHECK(read_family("", 4).empty());
  CHECK(read_family("# only\n\n", 4).empty());
}

TEST_CASE("read_family rejects malformed input with line numbers") {
  auto line_of = [](const char* text, int n) {
    try {
      read_family(text, n);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("1 2\nx 3\n", 4) == 2);
  CHECK(line_of("1 2\n\n0 1\n", 4) == 3);
  CHECK(line_of("5\n", 4) == 1);
  CHECK(line_of("1 1\n", 4) == 1);
  CHECK(line_of("1.5\n", 4) == 1);
}

TEST_CASE("write_family emits canonical text") {
  Family f(4, {ElementSet(4, {3, 4}), ElementSet(4, {2, 1})});
  CHECK(write_family(f) == "1 2\n3 4\n");
  CHECK(write_family(Family(4)) == "");
  CHECK_THROWS_AS(write_family(Family(4, {ElementSet(4)})), std::domain_error);
}

TEST_CASE("family text round-trips") {
  std::mt19937_64 rng(99);
  for (int c = 0; c < 2000; ++c) {
    int n = 1 + static_cast<int>(rng() % 20);
    std::vector<ElementSet> sets;
    int members = static_cast<int>(rng() % 8);
    for (int m = 0; m < members; ++m) {
      ElementSet s(n);
      int card = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      while (s.cardinality() < card)
        s = s.with(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
      sets.push_back(s);
    }
    Family f(n, std::move(sets));
    CHECK(read_family(write_family(f), n) == f);
  }
}

TEST_CASE("params validation") {
  Params p(8, 2, 3, 1);
  CHECK_FALSE(p.is_k_ary());
  CHECK(p.k() == 2);
  CHECK(p.top_two() == std::pair<int, int>{2, 3});

  CHECK_THROWS_AS(Params(4, 3, 2, 1), std::invalid_argument);  // r > s
  CHECK_THROWS_AS(Params(4, 2, 3, 0), std::invalid_argument);  // t < 1
  CHECK_THROWS_AS(Params(4, 2, 5, 1), std::invalid_argument);  // s > n
  CHECK_THROWS_AS(Params(4, 2, 3, 3), std::invalid_argument);  // t > r

  Params k(6, std::vector<int>{2, 1, 2}, 1);
  CHECK(k.is_k_ary());
  CHECK(k.k() == 3);
  CHECK(k.uniformities == std::vector<int>{1, 2, 2});
  CHECK(k.top_two() == std::pair<int, int>{2, 2});
  CHECK(k.r == 2);
  CHECK(k.s == 2);

  CHECK_THROWS_AS(Params(6, std::vector<int>{2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params(6, std::vector<int>{2, 7}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params(6, std::vector<int>{2, 2}, 3), std::invalid_argument);
}

TEST_CASE("version string present") {
  CHECK(std::string(kVersion).find('.') != std::string::npos);
}
