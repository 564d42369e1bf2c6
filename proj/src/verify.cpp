#include "crossfam/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "crossfam/bounds.hpp"
#include "crossfam/intersection.hpp"

namespace crossfam {

const char* to_string(SuiteId id) {
  switch (id) {
    case SuiteId::lemma21i: return "lemma21i";
    case SuiteId::lemma21ii: return "lemma21ii";
    case SuiteId::lemma31: return "lemma31";
    case SuiteId::lemma32: return "lemma32";
    case SuiteId::theorem: return "theorem";
  }
  return "?";
}

std::optional<SuiteId> suite_from_string(const std::string& s) {
  if (s == "lemma21i") return SuiteId::lemma21i;
  if (s == "lemma21ii") return SuiteId::lemma21ii;
  if (s == "lemma31") return SuiteId::lemma31;
  if (s == "lemma32") return SuiteId::lemma32;
  if (s == "theorem") return SuiteId::theorem;
  return std::nullopt;
}

namespace {

struct SuiteState {
  SuiteReport rep;

  void record(bool ok, const std::function<Counterexample()>& make) {
    ++rep.cases_run;
    if (ok) {
      ++rep.cases_passed;
    } else if (!rep.first_counterexample) {
      rep.first_counterexample = make();
    }
  }
};

std::vector<CompressionIndex> ordered_indices(int n) {
  std::vector<CompressionIndex> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

// every subfamily of the full layer, optionally capped in size
std::vector<Family> layer_subfamilies(int n, int r, std::size_t max_members,
                                      bool include_empty) {
  Family layer = generate_uniform(n, r);
  std::vector<ElementSet> members(layer.begin(), layer.end());
  std::vector<Family> out;
  const std::size_t width = members.size();
  for (std::uint64_t mask = include_empty ? 0 : 1;
       mask < (std::uint64_t{1} << width); ++mask) {
    if (max_members > 0 &&
        static_cast<std::size_t>(std::popcount(mask)) > max_members)
      continue;
    std::vector<ElementSet> sets;
    for (std::size_t i = 0; i < width; ++i)
      if ((mask >> i) & 1) sets.push_back(members[i]);
    out.emplace_back(n, std::move(sets));
  }
  return out;
}

ElementSet random_subset_of_size(std::mt19937_64& rng, int n, int t) {
  ElementSet out(n);
  while (out.cardinality() < t) {
    int e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    out = out.with(e);
  }
  return out;
}

CompressionIndex random_uncompression_index(std::mt19937_64& rng, int n) {
  int x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  int y = x;
  while (y == x) y = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  return {std::max(x, y), std::min(x, y)};
}

Family random_thin(std::mt19937_64& rng, const Family& f) {
  std::vector<ElementSet> kept;
  for (const auto& s : f)
    if (rng() % 10 >= 3) kept.push_back(s);
  if (kept.empty()) kept.push_back(f[0]);
  return Family(f.universe_size(), std::move(kept));
}

}  // namespace

std::pair<Family, Family> random_cross_pair(std::mt19937_64& rng, int n, int r,
                                            int s, int t) {
  ElementSet root = random_subset_of_size(rng, n, t);
  Family a = random_thin(rng, star(n, r, root));
  Family b = random_thin(rng, star(n, s, root));
  const int moves = static_cast<int>(rng() % 5);
  for (int m = 0; m < moves; ++m) {
    CompressionIndex idx = random_uncompression_index(rng, n);
    Family ca = compress_family(a, idx);
    Family cb = compress_family(b, idx);
    if (is_cross_t_intersecting(ca, cb, t)) {
      a = std::move(ca);
      b = std::move(cb);
    }
  }
  return {std::move(a), std::move(b)};
}

namespace {

// ----- single-step preservation ------------------------------------------

void check_preservation_case(SuiteState& st, const Family& a, const Family& b,
                             int r, int s, int t, CompressionIndex idx) {
  Family ca = compress_family(a, idx);
  Family cb = compress_family(b, idx);
  bool ok = is_cross_t_intersecting(ca, cb, t);
  st.record(ok, [&] {
    Counterexample ce;
    ce.suite = "lemma21i";
    ce.detail = "images of a cross-intersecting pair are no longer cross-intersecting";
    ce.n = a.universe_size();
    ce.r = r;
    ce.s = s;
    ce.t = t;
    ce.p = 0;
    ce.index = idx;
    ce.families = {{"a", a}, {"b", b}};
    return ce;
  });
}

void run_lemma21i(SuiteState& st, bool exhaustive, bool random,
                  std::uint64_t seed) {
  if (exhaustive) {
    auto cands = layer_subfamilies(4, 2, 3, false);
    auto idxs = ordered_indices(4);
    for (int t : {1, 2})
      for (const auto& a : cands)
        for (const auto& b : cands) {
          if (!is_cross_t_intersecting(a, b, t)) continue;
          for (auto idx : idxs) check_preservation_case(st, a, b, 2, 2, t, idx);
        }
  }
  if (random) {
    std::mt19937_64 rng(seed);
    auto idxs = ordered_indices(8);
    for (int c = 0; c < 10000; ++c) {
      auto [a, b] = random_cross_pair(rng, 8, 3, 3, 2);
      for (auto idx : idxs) check_preservation_case(st, a, b, 3, 3, 2, idx);
    }
  }
}

// ----- fixpoint agreement window ------------------------------------------

void check_window_case(SuiteState& st, const Family& a, const Family& b, int r,
                       int s, int t) {
  const int n = a.universe_size();
  const int w = std::min(r + s - t, n);
  auto [fa, fb, trace] = compress_pair_to_fixpoint(a, b);
  ElementSet window = ElementSet::prefix(n, w);
  bool ok = true;
  for (const auto& x : fa) {
    for (const auto& y : fb)
      if (x.intersect(y).intersect(window).cardinality() < t) {
        ok = false;
        break;
      }
    if (!ok) break;
  }
  st.record(ok, [&] {
    Counterexample ce;
    ce.suite = "lemma21ii";
    ce.detail =
        "fully compressed pair has members agreeing on fewer than t elements "
        "inside the leading window";
    ce.n = n;
    ce.r = r;
    ce.s = s;
    ce.t = t;
    ce.p = w;
    ce.families = {{"a", a}, {"b", b}, {"a_fixpoint", fa}, {"b_fixpoint", fb}};
    return ce;
  });
}

void run_lemma21ii(SuiteState& st, bool exhaustive, bool random,
                   std::uint64_t seed) {
  if (exhaustive) {
    auto cands = layer_subfamilies(4, 2, 3, false);
    for (int t : {1, 2})
      for (const auto& a : cands)
        for (const auto& b : cands) {
          if (!is_cross_t_intersecting(a, b, t)) continue;
          check_window_case(st, a, b, 2, 2, t);
        }
  }
  if (random) {
    std::mt19937_64 rng(seed);
    for (int c = 0; c < 10000; ++c) {
      auto [a, b] = random_cross_pair(rng, 8, 3, 3, 2);
      check_window_case(st, a, b, 3, 3, 2);
    }
  }
}

// ----- star transport for pairs -------------------------------------------

void check_pair_transport_case(SuiteState& st, const Family& a, const Family& b,
                               int r, int s, int t, CompressionIndex idx) {
  Family ca = compress_family(a, idx);
  Family cb = compress_family(b, idx);
  std::vector<Family> images{ca, cb};
  bool ok = true;
  if (common_star_root(images, t)) {
    std::vector<Family> originals{a, b};
    ok = common_star_root(originals, t).has_value();
  }
  st.record(ok, [&] {
    Counterexample ce;
    ce.suite = "lemma31";
    ce.detail =
        "images form a star pair with a shared root but the originals do not";
    ce.n = a.universe_size();
    ce.r = r;
    ce.s = s;
    ce.t = t;
    ce.p = 0;
    ce.index = idx;
    ce.families = {{"a", a}, {"b", b}};
    return ce;
  });
}

void run_lemma31(SuiteState& st, bool exhaustive, bool random,
                 std::uint64_t seed) {
  if (exhaustive) {
    auto cands_a = layer_subfamilies(4, 1, 0, false);
    auto cands_b = layer_subfamilies(4, 2, 0, false);
    auto idxs = ordered_indices(4);
    for (const auto& a : cands_a)
      for (const auto& b : cands_b) {
        if (!is_cross_t_intersecting(a, b, 1)) continue;
        for (auto idx : idxs) check_pair_transport_case(st, a, b, 1, 2, 1, idx);
      }
  }
  if (random) {
    std::mt19937_64 rng(seed);
    auto idxs = ordered_indices(9);
    for (int c = 0; c < 500; ++c) {
      ElementSet root = random_subset_of_size(rng, 9, 2);
      Family a = star(9, 2, root);
      Family b = star(9, 3, root);
      const int moves = static_cast<int>(rng() % 4);
      for (int m = 0; m < moves; ++m) {
        CompressionIndex idx = random_uncompression_index(rng, 9);
        Family na = compress_family(a, idx);
        Family nb = compress_family(b, idx);
        if (is_cross_t_intersecting(na, nb, 2)) {
          a = std::move(na);
          b = std::move(nb);
        }
      }
      for (auto idx : idxs) check_pair_transport_case(st, a, b, 2, 3, 2, idx);
    }
  }
}

// ----- star transport for one intersecting family -------------------------

void check_family_transport_case(SuiteState& st, const Family& g, int r, int t,
                                 CompressionIndex idx) {
  Family cg = compress_family(g, idx);
  bool ok = true;
  if (!cg.empty() && recognize_star(cg, t))
    ok = recognize_star(g, t).has_value();
  st.record(ok, [&] {
    Counterexample ce;
    ce.suite = "lemma32";
    ce.detail = "image family is a star but the original is not";
    ce.n = g.universe_size();
    ce.r = r;
    ce.s = r;
    ce.t = t;
    ce.p = 0;
    ce.index = idx;
    ce.families = {{"g", g}};
    return ce;
  });
}

void run_lemma32(SuiteState& st, bool exhaustive, bool random,
                 std::uint64_t seed) {
  if (exhaustive) {
    for (int n : {4, 5}) {
      auto cands = layer_subfamilies(n, 2, 0, true);
      auto idxs = ordered_indices(n);
      for (const auto& g : cands) {
        if (!is_t_intersecting(g, 1)) continue;
        for (auto idx : idxs) check_family_transport_case(st, g, 2, 1, idx);
      }
    }
  }
  if (random) {
    std::mt19937_64 rng(seed);
    auto idxs = ordered_indices(8);
    for (int c = 0; c < 2000; ++c) {
      ElementSet root = random_subset_of_size(rng, 8, 2);
      Family g = star(8, 3, root);
      const int moves = static_cast<int>(rng() % 4);
      for (int m = 0; m < moves; ++m) {
        CompressionIndex idx = random_uncompression_index(rng, 8);
        Family ng = compress_family(g, idx);
        if (is_t_intersecting(ng, 2)) g = std::move(ng);
      }
      for (auto idx : idxs) check_family_transport_case(st, g, 3, 2, idx);
    }
  }
}

// ----- extremal instances --------------------------------------------------

void check_extremal_case(SuiteState& st, const Params& p, int arity,
                         const SearchLimits& lim) {
  TheoremVerdict v = verify_theorem(p, SearchMode::closure, lim);
  BigCount expected_ties = binomial(static_cast<unsigned>(p.n),
                                    static_cast<unsigned>(p.t));
  std::string why;
  if (!v.threshold_applicable)
    why = "instance unexpectedly below the size threshold";
  else if (!v.bound_tight)
    why = "exact optimum does not meet the product bound";
  else if (!v.uniqueness || !*v.uniqueness)
    why = "optimal witnesses are not all star tuples";
  else if (BigCount(v.report.witness_total) != expected_ties)
    why = "number of optimal witnesses differs from the number of possible roots";
  st.record(why.empty(), [&] {
    Counterexample ce;
    ce.suite = "theorem";
    ce.detail = why;
    ce.n = p.n;
    ce.r = p.r;
    ce.s = p.s;
    ce.t = p.t;
    ce.p = arity;
    return ce;
  });
}

void run_theorem(SuiteState& st, const SearchLimits& lim) {
  // pair instances kept small enough that exact search is instant
  for (int n = 2; n <= 4; ++n) check_extremal_case(st, Params(n, 1, 1, 1), 2, lim);
  for (int n = 4; n <= 6; ++n) check_extremal_case(st, Params(n, 1, 2, 1), 2, lim);
  for (int n = 3; n <= 6; ++n) check_extremal_case(st, Params(n, 2, 2, 2), 2, lim);
  // uniform triples
  for (int n = 2; n <= 5; ++n)
    check_extremal_case(st, Params(n, std::vector<int>{1, 1, 1}, 1), 3, lim);
  for (int n = 3; n <= 4; ++n)
    check_extremal_case(st, Params(n, std::vector<int>{2, 2, 2}, 2), 3, lim);
}

}  // namespace

SuiteReport run_suite(SuiteId id, const std::string& grid,
                      std::optional<std::uint64_t> seed,
                      const SearchLimits& lim) {
  const bool lemma_suite = id != SuiteId::theorem;
  bool exhaustive = false;
  bool random = false;
  if (lemma_suite) {
    if (grid == "default") {
      exhaustive = random = true;
    } else if (grid == "exhaustive") {
      exhaustive = true;
    } else if (grid == "random") {
      random = true;
    } else {
      throw std::invalid_argument("unknown grid '" + grid + "' for suite " +
                                  to_string(id));
    }
  } else if (grid != "default" && grid != "default-tiny") {
    throw std::invalid_argument("unknown grid '" + grid + "' for suite " +
                                to_string(id));
  }

  SuiteState st;
  st.rep.suite = to_string(id);
  st.rep.grid = grid;
  const std::uint64_t seed_val = seed.value_or(kDefaultSuiteSeed);
  if (random) st.rep.seed = seed_val;

  const auto start = std::chrono::steady_clock::now();
  switch (id) {
    case SuiteId::lemma21i: run_lemma21i(st, exhaustive, random, seed_val); break;
    case SuiteId::lemma21ii: run_lemma21ii(st, exhaustive, random, seed_val); break;
    case SuiteId::lemma31: run_lemma31(st, exhaustive, random, seed_val); break;
    case SuiteId::lemma32: run_lemma32(st, exhaustive, random, seed_val); break;
    case SuiteId::theorem: run_theorem(st, lim); break;
  }
  const auto stop = std::chrono::steady_clock::now();
  st.rep.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return st.rep;
}

namespace {

const Family& labeled_family(const Counterexample& ce, const std::string& label) {
  for (const auto& [name, fam] : ce.families)
    if (name == label) return fam;
  throw std::invalid_argument("counterexample is missing family '" + label + "'");
}

CompressionIndex required_index(const Counterexample& ce) {
  if (!ce.index)
    throw std::invalid_argument("counterexample is missing a compression index");
  return *ce.index;
}

}  // namespace

bool replay(const Counterexample& ce) {
  if (ce.suite == "lemma21i") {
    const Family& a = labeled_family(ce, "a");
    const Family& b = labeled_family(ce, "b");
    CompressionIndex idx = required_index(ce);
    if (!is_cross_t_intersecting(a, b, ce.t)) return false;
    return !is_cross_t_intersecting(compress_family(a, idx),
                                    compress_family(b, idx), ce.t);
  }
  if (ce.suite == "lemma21ii") {
    const Family& a = labeled_family(ce, "a");
    const Family& b = labeled_family(ce, "b");
    if (!is_cross_t_intersecting(a, b, ce.t)) return false;
    auto [fa, fb, trace] = compress_pair_to_fixpoint(a, b);
    const int w = std::min(ce.r + ce.s - ce.t, ce.n);
    ElementSet window = ElementSet::prefix(ce.n, w);
    for (const auto& x : fa)
      for (const auto& y : fb)
        if (x.intersect(y).intersect(window).cardinality() < ce.t) return true;
    return false;
  }
  if (ce.suite == "lemma31") {
    const Family& a = labeled_family(ce, "a");
    const Family& b = labeled_family(ce, "b");
    CompressionIndex idx = required_index(ce);
    if (!is_cross_t_intersecting(a, b, ce.t)) return false;
    std::vector<Family> images{compress_family(a, idx), compress_family(b, idx)};
    if (!common_star_root(images, ce.t)) return false;
    std::vector<Family> originals{a, b};
    return !common_star_root(originals, ce.t).has_value();
  }
  if (ce.suite == "lemma32") {
    const Family& g = labeled_family(ce, "g");
    CompressionIndex idx = required_index(ce);
    if (!is_t_intersecting(g, ce.t)) return false;
    Family cg = compress_family(g, idx);
    if (cg.empty() || !recognize_star(cg, ce.t)) return false;
    return !recognize_star(g, ce.t).has_value();
  }
  if (ce.suite == "theorem") {
    Params p = ce.p > 2
                   ? Params(ce.n, std::vector<int>(static_cast<std::size_t>(ce.p),
                                                   ce.r), ce.t)
                   : Params(ce.n, ce.r, ce.s, ce.t);
    TheoremVerdict v = verify_theorem(p, SearchMode::closure, SearchLimits{});
    BigCount expected_ties = binomial(static_cast<unsigned>(p.n),
                                      static_cast<unsigned>(p.t));
    bool holds = v.threshold_applicable && v.bound_tight && v.uniqueness &&
                 *v.uniqueness &&
                 BigCount(v.report.witness_total) == expected_ties;
    return !holds;
  }
  throw std::invalid_argument("unknown suite '" + ce.suite + "' in counterexample");
}

}
