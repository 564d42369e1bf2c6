#include "crossfam/search.hpp"

#include <algorithm>
#include <thread>

#include "crossfam/intersection.hpp"

namespace crossfam {

const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::brute: return "brute";
    case SearchMode::closure: return "closure";
    case SearchMode::compressed: return "compressed";
  }
  return "?";
}

std::optional<SearchMode> search_mode_from_string(const std::string& s) {
  if (s == "brute") return SearchMode::brute;
  if (s == "closure") return SearchMode::closure;
  if (s == "compressed") return SearchMode::compressed;
  return std::nullopt;
}

namespace {

using Members = std::vector<ElementSet>;
using Tuple = std::vector<Members>;

std::vector<ElementSet> layer_members(int n, int r) {
  Family layer = generate_uniform(n, r);
  return {layer.begin(), layer.end()};
}

void check_layer_guard(int n, int r, std::uint64_t guard, const char* what) {
  if (binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)) > BigCount(guard))
    throw GuardError(std::string(what) + ": layer C(" + std::to_string(n) + "," +
                     std::to_string(r) + ") exceeds guard " + std::to_string(guard) +
                     "; raise the guard explicitly to run larger instances");
}

std::uint64_t to_u64(const BigCount& v) {
  return v.template convert_to<std::uint64_t>();
}

// Shared accumulator: running optimum plus every tuple attaining it.
// best is seeded with the star product, a feasible value, so nothing optimal
// is ever discarded.
struct Accumulator {
  std::uint64_t best = 0;
  std::vector<Tuple> ties;
  std::uint64_t nodes = 0;

  void offer(std::uint64_t product, Tuple&& tuple) {
    if (product < best) return;
    if (product > best) {
      best = product;
      ties.clear();
    }
    ties.push_back(std::move(tuple));
  }

  void merge(Accumulator&& other) {
    nodes += other.nodes;
    if (other.best < best) return;
    if (other.best > best) {
      best = other.best;
      ties = std::move(other.ties);
      return;
    }
    for (auto& t : other.ties) ties.push_back(std::move(t));
  }
};

bool tuple_less(const Tuple& a, const Tuple& b) {
  // member vectors are already canonically sorted
  for (std::size_t f = 0; f < a.size() && f < b.size(); ++f) {
    auto cmp = std::lexicographical_compare_three_way(
        a[f].begin(), a[f].end(), b[f].begin(), b[f].end(),
        [](const ElementSet& x, const ElementSet& y) {
          return canonical_order(x, y);
        });
    if (cmp != std::strong_ordering::equal)
      return cmp == std::strong_ordering::less;
  }
  return a.size() < b.size();
}

SearchReport finalize_report(SearchMode mode, int n, int t, std::uint64_t best,
                             std::vector<Tuple>&& ties, std::uint64_t nodes) {
  SearchReport rep;
  rep.mode = mode;
  rep.optimum = best;
  rep.nodes_explored = nodes;
  rep.witness_total = ties.size();
  std::sort(ties.begin(), ties.end(), tuple_less);
  rep.witnesses_truncated = ties.size() > kWitnessCap;

  bool all_star = !ties.empty();
  std::size_t kept = std::min(ties.size(), kWitnessCap);
  rep.witnesses.reserve(kept);
  for (std::size_t w = 0; w < ties.size(); ++w) {
    std::vector<Family> families;
    families.reserve(ties[w].size());
    for (auto& members : ties[w]) families.emplace_back(n, std::move(members));
    auto root = common_star_root(families, t);
    if (!root) all_star = false;
    if (w < kept)
      rep.witnesses.push_back(SearchWitness{std::move(families), root});
  }
  rep.all_witnesses_are_star_tuples = all_star;
  return rep;
}

}  // namespace

SearchReport max_product_brute(const Params& p, const SearchLimits& lim) {
  if (p.is_k_ary())
    throw std::invalid_argument("pair search got k-ary parameters");
  check_layer_guard(p.n, p.r, lim.brute_layer_guard, "brute");
  check_layer_guard(p.n, p.r, 25, "brute (hard subset-mask cap)");
  check_layer_guard(p.n, p.s, lim.layer_materialize_guard, "brute");

  const Members layer_r = layer_members(p.n, p.r);
  const Members layer_s = layer_members(p.n, p.s);
  const std::size_t width = layer_r.size();

  Accumulator acc;
  acc.best = to_u64(pair_bound(p));

  const std::uint64_t first = lim.include_empty ? 0 : 1;
  for (std::uint64_t mask = first; mask < (std::uint64_t{1} << width); ++mask) {
    ++acc.nodes;
    Members a;
    for (std::size_t i = 0; i < width; ++i)
      if ((mask >> i) & 1) a.push_back(layer_r[i]);
    Members b;
    for (const auto& cand : layer_s) {
      bool ok = true;
      for (const auto& x : a)
        if (cand.intersection_size(x) < p.t) {
          ok = false;
          break;
        }
      if (ok) b.push_back(cand);
    }
    if (a.empty() && !lim.include_empty) continue;
    const std::uint64_t product =
        static_cast<std::uint64_t>(a.size()) * b.size();
    acc.offer(product, Tuple{std::move(a), std::move(b)});
  }
  return finalize_report(SearchMode::brute, p.n, p.t, acc.best,
                         std::move(acc.ties), acc.nodes);
}

namespace {

struct BnbContext {
  const Members* layer;
  int t;
  bool compressed;
  // per candidate: layer indices of its proper left-compression images, all
  // canonically earlier; a left-compressed family may take a candidate only
  // when every image is already in
  std::vector<std::vector<int>> images;
  std::uint64_t seed;
  bool include_empty;
};

struct BnbTask {
  std::size_t c;
  std::vector<int> included_idx;
  Members compat;
};

void bnb_dfs(const BnbContext& ctx, std::size_t c, std::vector<int>& included_idx,
             std::vector<char>& in_flags, const Members& compat,
             Accumulator& out) {
  ++out.nodes;
  const std::uint64_t a = included_idx.size();
  const std::uint64_t m = ctx.layer->size() - c;
  if ((a + m) * compat.size() < ctx.seed) return;
  if (c == ctx.layer->size()) {
    if (a == 0 && !ctx.include_empty) return;
    Members chosen;
    chosen.reserve(included_idx.size());
    for (int i : included_idx) chosen.push_back((*ctx.layer)[static_cast<std::size_t>(i)]);
    out.offer(a * compat.size(), Tuple{std::move(chosen), compat});
    return;
  }
  bool allowed = true;
  if (ctx.compressed)
    for (int img : ctx.images[c])
      if (!in_flags[static_cast<std::size_t>(img)]) {
        allowed = false;
        break;
      }
  if (allowed) {
    const ElementSet& cand = (*ctx.layer)[c];
    Members next;
    next.reserve(compat.size());
    for (const auto& b : compat)
      if (b.intersection_size(cand) >= ctx.t) next.push_back(b);
    included_idx.push_back(static_cast<int>(c));
    in_flags[c] = 1;
    bnb_dfs(ctx, c + 1, included_idx, in_flags, next, out);
    in_flags[c] = 0;
    included_idx.pop_back();
  }
  bnb_dfs(ctx, c + 1, included_idx, in_flags, compat, out);
}

// Identical traversal to bnb_dfs down to frontier_depth, where subtrees are
// emitted as tasks instead of being descended. Node counts stay a pure
// function of the instance: nodes above the frontier are counted here, the
// rest inside the tasks.
void bnb_expand(const BnbContext& ctx, std::size_t c, std::size_t frontier_depth,
                std::vector<int>& included_idx, std::vector<char>& in_flags,
                const Members& compat, Accumulator& out,
                std::vector<BnbTask>& tasks) {
  if (c == frontier_depth && c < ctx.layer->size()) {
    tasks.push_back(BnbTask{c, included_idx, compat});
    return;
  }
  ++out.nodes;
  const std::uint64_t a = included_idx.size();
  const std::uint64_t m = ctx.layer->size() - c;
  if ((a + m) * compat.size() < ctx.seed) return;
  if (c == ctx.layer->size()) {
    if (a == 0 && !ctx.include_empty) return;
    Members chosen;
    for (int i : included_idx) chosen.push_back((*ctx.layer)[static_cast<std::size_t>(i)]);
    out.offer(a * compat.size(), Tuple{std::move(chosen), compat});
    return;
  }
  bool allowed = true;
  if (ctx.compressed)
    for (int img : ctx.images[c])
      if (!in_flags[static_cast<std::size_t>(img)]) {
        allowed = false;
        break;
      }
  if (allowed) {
    const ElementSet& cand = (*ctx.layer)[c];
    Members next;
    for (const auto& b : compat)
      if (b.intersection_size(cand) >= ctx.t) next.push_back(b);
    included_idx.push_back(static_cast<int>(c));
    in_flags[c] = 1;
    bnb_expand(ctx, c + 1, frontier_depth, included_idx, in_flags, next, out, tasks);
    in_flags[c] = 0;
    included_idx.pop_back();
  }
  bnb_expand(ctx, c + 1, frontier_depth, included_idx, in_flags, compat, out, tasks);
}

Accumulator run_bnb_task(const BnbContext& ctx, const BnbTask& task) {
  Accumulator acc;
  acc.best = ctx.seed;
  std::vector<int> included_idx = task.included_idx;
  std::vector<char> in_flags(ctx.layer->size(), 0);
  for (int i : included_idx) in_flags[static_cast<std::size_t>(i)] = 1;
  bnb_dfs(ctx, task.c, included_idx, in_flags, task.compat, acc);
  return acc;
}

}  // namespace

SearchReport max_product_bnb(const Params& p, SearchMode mode,
                             const SearchLimits& lim) {
  if (p.is_k_ary())
    throw std::invalid_argument("pair search got k-ary parameters");
  if (mode == SearchMode::brute) return max_product_brute(p, lim);
  check_layer_guard(p.n, p.r, lim.bnb_layer_guard, "branch and bound");
  check_layer_guard(p.n, p.r, lim.layer_materialize_guard, "branch and bound");
  check_layer_guard(p.n, p.s, lim.layer_materialize_guard, "branch and bound");

  BnbContext ctx;
  const Members layer_r = layer_members(p.n, p.r);
  const Members layer_s = layer_members(p.n, p.s);
  ctx.layer = &layer_r;
  ctx.t = p.t;
  ctx.compressed = mode == SearchMode::compressed;
  ctx.seed = to_u64(pair_bound(p));
  ctx.include_empty = lim.include_empty;

  if (ctx.compressed) {
    ctx.images.resize(layer_r.size());
    auto index_of = [&](const ElementSet& s) {
      auto it = std::lower_bound(layer_r.begin(), layer_r.end(), s,
                                 [](const ElementSet& a, const ElementSet& b) {
                                   return canonical_less(a, b);
                                 });
      return static_cast<int>(it - layer_r.begin());
    };
    for (std::size_t c = 0; c < layer_r.size(); ++c) {
      const ElementSet& a = layer_r[c];
      for (int j : a.elements())
        for (int i = 1; i < j; ++i)
          if (!a.contains(i))
            ctx.images[c].push_back(index_of(a.without(j).with(i)));
    }
  }

  const int threads = std::max(1, lim.threads);
  std::vector<int> included_idx;
  std::vector<char> in_flags(layer_r.size(), 0);
  Accumulator acc;
  acc.best = ctx.seed;

  std::size_t frontier_depth = 0;
  if (threads > 1) {
    while ((std::size_t{1} << frontier_depth) <
               static_cast<std::size_t>(threads) * 8 &&
           frontier_depth < layer_r.size() && frontier_depth < 14)
      ++frontier_depth;
  }

  std::vector<BnbTask> tasks;
  if (frontier_depth == 0) {
    bnb_dfs(ctx, 0, included_idx, in_flags, layer_s, acc);
  } else {
    bnb_expand(ctx, 0, frontier_depth, included_idx, in_flags, layer_s, acc, tasks);
    std::vector<Accumulator> partial(tasks.size());
    std::vector<std::thread> pool;
    std::size_t next_chunk = 0;
    const std::size_t per = (tasks.size() + threads - 1) / std::max<std::size_t>(1, threads);
    for (int w = 0; w < threads && next_chunk < tasks.size(); ++w) {
      std::size_t from = next_chunk;
      std::size_t to = std::min(tasks.size(), from + per);
      next_chunk = to;
      pool.emplace_back([&, from, to] {
        for (std::size_t i = from; i < to; ++i) partial[i] = run_bnb_task(ctx, tasks[i]);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : partial) acc.merge(std::move(part));
  }
  return finalize_report(mode, p.n, p.t, acc.best, std::move(acc.ties), acc.nodes);
}

namespace {

struct KContext {
  int n = 0, t = 0;
  std::vector<int> rs;
  std::uint64_t seed = 0;
  bool include_empty = false;
};

void k_rec(const KContext& ctx, std::size_t d, std::vector<Members>& chosen,
           const std::vector<Members>& pools, Accumulator& out) {
  const std::size_t k = ctx.rs.size();
  if (d == k - 1) {
    ++out.nodes;
    // the last family is closed: its pool is exactly the sets compatible
    // with every chosen family, and optima are component-wise closed
    std::uint64_t product = pools[d].size();
    for (const auto& fam : chosen) product *= fam.size();
    if (product == 0 && !ctx.include_empty) return;
    Tuple tuple = chosen;
    tuple.push_back(pools[d]);
    out.offer(product, std::move(tuple));
    return;
  }
  const Members& pool = pools[d];
  const std::uint64_t first = ctx.include_empty ? 0 : 1;
  for (std::uint64_t mask = first; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    ++out.nodes;
    Members subset;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1) subset.push_back(pool[i]);
    std::vector<Members> next_pools = pools;
    std::uint64_t bound = subset.size();
    for (const auto& fam : chosen) bound *= fam.size();
    for (std::size_t f = d + 1; f < k; ++f) {
      Members filtered;
      for (const auto& candidate : next_pools[f]) {
        bool ok = true;
        for (const auto& x : subset)
          if (candidate.intersection_size(x) < ctx.t) {
            ok = false;
            break;
          }
        if (ok) filtered.push_back(candidate);
      }
      next_pools[f] = std::move(filtered);
      bound *= next_pools[f].size();
    }
    if (bound < ctx.seed) continue;
    chosen.push_back(std::move(subset));
    k_rec(ctx, d + 1, chosen, next_pools, out);
    chosen.pop_back();
  }
}

}  // namespace

SearchReport max_product_k(int n, const std::vector<int>& uniformities, int t,
                           const SearchLimits& lim) {
  Params p(n, uniformities, t);
  KContext ctx;
  ctx.n = n;
  ctx.t = t;
  ctx.rs = p.uniformities;
  ctx.include_empty = lim.include_empty;

  BigCount layer_product = 1;
  int bits = 0;
  for (std::size_t f = 0; f < ctx.rs.size(); ++f) {
    BigCount size = binomial(static_cast<unsigned>(n), static_cast<unsigned>(ctx.rs[f]));
    layer_product *= size;
    if (f + 1 < ctx.rs.size()) {
      if (size > 25)
        throw GuardError("k-ary search: enumerated layer exceeds the subset-mask cap");
      bits += static_cast<int>(to_u64(size));
    }
  }
  if (layer_product > BigCount(lim.k_layer_product_guard))
    throw GuardError("k-ary search: product of layer sizes exceeds guard " +
                     std::to_string(lim.k_layer_product_guard));
  if (bits > lim.k_enumeration_bits_guard)
    throw GuardError("k-ary search: enumeration width exceeds guard " +
                     std::to_string(lim.k_enumeration_bits_guard));

  std::vector<Members> pools;
  pools.reserve(ctx.rs.size());
  for (int r : ctx.rs) pools.push_back(layer_members(n, r));

  ctx.seed = to_u64(k_bound(n, ctx.rs, t));
  Accumulator acc;
  acc.best = ctx.seed;
  std::vector<Members> chosen;
  k_rec(ctx, 0, chosen, pools, acc);
  return finalize_report(SearchMode::brute, n, t, acc.best, std::move(acc.ties),
                         acc.nodes);
}

TheoremVerdict verify_theorem(const Params& p, SearchMode mode,
                              const SearchLimits& lim) {
  TheoremVerdict v{.params = p,
                   .mode = p.is_k_ary() ? SearchMode::brute : mode,
                   .optimum = 0,
                   .bound = 0};
  if (p.is_k_ary()) {
    v.report = max_product_k(p.n, p.uniformities, p.t, lim);
    v.bound = k_bound(p.n, p.uniformities, p.t);
  } else {
    v.report = mode == SearchMode::brute ? max_product_brute(p, lim)
                                         : max_product_bnb(p, mode, lim);
    v.bound = pair_bound(p);
  }
  v.optimum = v.report.optimum;
  v.bound_holds = v.optimum <= v.bound;
  v.bound_tight = v.optimum == v.bound;
  if (v.mode != SearchMode::compressed)
    v.uniqueness = v.report.all_witnesses_are_star_tuples;
  v.threshold_applicable = threshold_applicable(p);
  return v;
}

}
