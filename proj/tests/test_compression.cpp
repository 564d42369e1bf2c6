#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "crossfam/compression.hpp"
#include "crossfam/intersection.hpp"

using namespace crossfam;

namespace {

// independent re-implementations used as oracles

ElementSet delta_oracle(const ElementSet& s, CompressionIndex idx) {
  if (!s.contains(idx.j) || s.contains(idx.i)) return s;
  return s.without(idx.j).with(idx.i);
}

Family big_delta_oracle(const Family& f, CompressionIndex idx) {
  std::vector<ElementSet> out;
  for (const auto& a : f) {
    ElementSet image = delta_oracle(a, idx);
    out.push_back(image == a || f.contains(image) ? a : image);
  }
  return Family(f.universe_size(), std::move(out));
}

bool left_compressed_oracle(const Family& f) {
  const int n = f.universe_size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(big_delta_oracle(f, {i, j}) == f)) return false;
  return true;
}

Family random_family(std::mt19937_64& rng, int n, int max_members) {
  std::vector<ElementSet> sets;
  int members = static_cast<int>(rng() % (max_members + 1));
  for (int m = 0; m < members; ++m) {
    ElementSet s(n);
    int card = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    while (s.cardinality() < card)
      s = s.with(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    sets.push_back(s);
  }
  return Family(n, std::move(sets));
}

CompressionIndex random_index(std::mt19937_64& rng, int n) {
  int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  int j = i;
  while (j == i) j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  return {i, j};
}

}  // namespace

TEST_CASE("set compression") {
  ElementSet s(4, {2, 3});
  CHECK(compress_set(s, {1, 2}) == ElementSet(4, {1, 3}));
  CHECK(compress_set(s, {1, 4}) == s);  // j absent
  CHECK(compress_set(s, {3, 2}) == s);  // i already present
  CHECK(compress_set(s, {4, 2}) == ElementSet(4, {3, 4}));  // right move

  CHECK_THROWS_AS(compress_set(s, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(compress_set(s, {0, 2}), std::out_of_range);
  CHECK_THROWS_AS(compress_set(s, {1, 5}), std::out_of_range);
  CHECK(is_left(CompressionIndex{1, 2}));
  CHECK_FALSE(is_left(CompressionIndex{2, 1}));
}

TEST_CASE("family compression keeps members whose image is present") {
  Family f(3, {ElementSet(3, {1, 3}), ElementSet(3, {2, 3})});
  // image of {2,3} is {1,3}, already a member, so nothing moves
  CHECK(compress_family(f, {1, 2}) == f);
  // but (2,3) shifts {1,3} onto {1,2}
  Family g = compress_family(f, {2, 3});
  CHECK(g == Family(3, {ElementSet(3, {1, 2}), ElementSet(3, {2, 3})}));

  Family single(3, {ElementSet(3, {2, 3})});
  CHECK(compress_family(single, {1, 2}) ==
        Family(3, {ElementSet(3, {1, 3})}));
}

TEST_CASE("family potential") {
  CHECK(family_potential(Family(3)) == 0);
  CHECK(family_potential(Family(3, {ElementSet(3, {2, 3})})) == 5);
  CHECK(family_potential(Family(3, {ElementSet(3, {1, 2}),
                                    ElementSet(3, {1, 3})})) == 7);
}

TEST_CASE("first changing left index and the compressed predicate") {
  Family f(3, {ElementSet(3, {2, 3})});
  auto idx = first_changing_left_index(f);
  REQUIRE(idx.has_value());
  CHECK(*idx == CompressionIndex{1, 2});
  CHECK_FALSE(is_left_compressed(f));

  Family fixed(3, {ElementSet(3, {1, 2})});
  CHECK_FALSE(first_changing_left_index(fixed).has_value());
  CHECK(is_left_compressed(fixed));
  CHECK(is_left_compressed(Family(3)));
  CHECK(is_left_compressed(star(5, 3, ElementSet(5, {1, 2}))));
}

TEST_CASE("single-family fixpoint with trace") {
  Family f(3, {ElementSet(3, {2, 3})});
  auto [result, trace] = compress_to_fixpoint(f);
  CHECK(result == Family(3, {ElementSet(3, {1, 2})}));
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].index == CompressionIndex{1, 2});
  CHECK(trace.steps[1].index == CompressionIndex{2, 3});
  CHECK(trace.steps[0].changed_a);
  CHECK_FALSE(trace.steps[0].changed_b);
  CHECK(trace.sweeps == 3);
  CHECK(trace.initial_potential == 5);
  CHECK(trace.final_potential == 3);

  auto [again, trace2] = compress_to_fixpoint(result);
  CHECK(again == result);
  CHECK(trace2.steps.empty());
  CHECK(trace2.sweeps == 1);
}

TEST_CASE("pair fixpoint applies each index to both families") {
  Family a(3, {ElementSet(3, {2})});
  Family b(3, {ElementSet(3, {2, 3})});
  auto [fa, fb, trace] = compress_pair_to_fixpoint(a, b);
  CHECK(fa == Family(3, {ElementSet(3, {1})}));
  CHECK(fb == Family(3, {ElementSet(3, {1, 2})}));
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].index == CompressionIndex{1, 2});
  CHECK(trace.steps[0].changed_a);
  CHECK(trace.steps[0].changed_b);
  CHECK(trace.steps[1].index == CompressionIndex{2, 3});
  CHECK_FALSE(trace.steps[1].changed_a);
  CHECK(trace.steps[1].changed_b);
  CHECK(trace.initial_potential == 7);
  CHECK(trace.final_potential == 4);
  CHECK(trace.sweeps == 3);
}

TEST_CASE("pair fixpoint with an empty side") {
  Family a(3);
  Family b(3, {ElementSet(3, {2, 3})});
  auto [fa, fb, trace] = compress_pair_to_fixpoint(a, b);
  CHECK(fa.empty());
  CHECK(fb == Family(3, {ElementSet(3, {1, 2})}));
  for (const auto& step : trace.steps) {
    CHECK_FALSE(step.changed_a);
    CHECK(step.changed_b);
  }
}

TEST_CASE("compression mechanics on random families") {
  std::mt19937_64 rng(424242);
  for (int c = 0; c < 3000; ++c) {
    int n = 1 + static_cast<int>(rng() % 10);
    Family f = random_family(rng, n, 10);
    if (n < 2) continue;
    for (int k = 0; k < 5; ++k) {
      CompressionIndex idx = random_index(rng, n);
      Family g = compress_family(f, idx);
      CHECK(g == big_delta_oracle(f, idx));
      CHECK(g.size() == f.size());
      CHECK(compress_family(g, idx) == g);  // idempotent
      if (is_left(idx) && !(g == f))
        CHECK(family_potential(g) < family_potential(f));
    }
  }
}

TEST_CASE("fixpoints are left-compressed and replayable") {
  std::mt19937_64 rng(31337);
  for (int c = 0; c < 500; ++c) {
    int n = 2 + static_cast<int>(rng() % 9);
    Family f = random_family(rng, n, 10);
    auto [fixed, trace] = compress_to_fixpoint(f);

    CHECK(fixed.size() == f.size());
    CHECK(is_left_compressed(fixed));
    CHECK(left_compressed_oracle(fixed));
    CHECK(trace.initial_potential == family_potential(f));
    CHECK(trace.final_potential == family_potential(fixed));
    CHECK(trace.sweeps == static_cast<int>(trace.steps.size()) + 1);

    // replaying the recorded steps through the oracle reproduces the result
    Family replayed = f;
    for (const auto& step : trace.steps) {
      CHECK(is_left(step.index));
      Family next = big_delta_oracle(replayed, step.index);
      CHECK_FALSE(next == replayed);  // recorded steps all changed something
      replayed = next;
    }
    CHECK(replayed == fixed);
  }
}

TEST_CASE("an order-independent oracle also reaches a fixpoint of equal size") {
  std::mt19937_64 rng(2718);
  for (int c = 0; c < 200; ++c) {
    int n = 2 + static_cast<int>(rng() % 7);
    Family f = random_family(rng, n, 8);
    auto [fixed, trace] = compress_to_fixpoint(f);

    // reverse-lexicographic application order
    Family g = f;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int j = n; j >= 2 && !changed; --j)
        for (int i = j - 1; i >= 1 && !changed; --i) {
          Family next = big_delta_oracle(g, {i, j});
          if (!(next == g)) {
            g = next;
            changed = true;
          }
        }
    }
    CHECK(left_compressed_oracle(g));
    CHECK(g.size() == fixed.size());
    CHECK(family_potential(g) <= family_potential(f));
  }
}

TEST_CASE("pair fixpoint keeps cross-intersection and matches potentials") {
  std::mt19937_64 rng(555);
  for (int c = 0; c < 300; ++c) {
    int n = 3 + static_cast<int>(rng() % 5);
    Family a = random_family(rng, n, 6);
    Family b = random_family(rng, n, 6);
    auto [fa, fb, trace] = compress_pair_to_fixpoint(a, b);
    CHECK(fa.size() == a.size());
    CHECK(fb.size() == b.size());
    CHECK(trace.initial_potential == family_potential(a) + family_potential(b));
    CHECK(trace.final_potential == family_potential(fa) + family_potential(fb));
    for (const auto& step : trace.steps) CHECK((step.changed_a || step.changed_b));
    for (int t = 1; t <= 2; ++t)
      if (is_cross_t_intersecting(a, b, t))
        CHECK(is_cross_t_intersecting(fa, fb, t));

    // the pair fixpoint leaves no left index that moves either family
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CHECK(compress_family(fa, {i, j}) == fa);
        CHECK(compress_family(fb, {i, j}) == fb);
      }
  }
}
