#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "crossfam/compression.hpp"
#include "crossfam/family.hpp"
#include "crossfam/search.hpp"

namespace crossfam {

/// Property suites runnable from the CLI. Ids are part of the interface.
///   lemma21i  : simultaneous compression keeps pairs cross-t-intersecting
///   lemma21ii : compressed cross-t pairs meet inside the prefix window
///               [r+s-t] in every member pair
///   lemma31   : if some compression maps a cross-t pair onto full stars on a
///               common core, the original pair already was such a star pair
///               (needs n at or above the threshold)
///   lemma32   : if some compression of a t-intersecting family is a full
///               t-core star of its layer, the family already was one
///               (needs n >= 2p - t + 1)
///   theorem   : product bound, tightness, and star-pair uniqueness on
///               threshold-applicable instances
enum class SuiteId { lemma21i, lemma21ii, lemma31, lemma32, theorem };

const char* to_string(SuiteId id);
std::optional<SuiteId> suite_from_string(const std::string& s);

/// Self-contained record of one failing case, sufficient to re-run it.
struct Counterexample {
  std::string suite;
  std::string detail;
  int n = 0, r = 0, s = 0, t = 0, p = 0;
  std::optional<CompressionIndex> index;
  std::vector<std::pair<std::string, Family>> families;  // labeled A/B/G
};

struct SuiteReport {
  std::string suite;
  std::string grid;
  std::uint64_t cases_run = 0;
  std::uint64_t cases_passed = 0;
  std::optional<Counterexample> first_counterexample;
  double wall_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

inline constexpr std::uint64_t kDefaultSuiteSeed = 12345;

/// Grid presets per suite: "default" everywhere (alias "default-tiny" for
/// theorem), plus "exhaustive" / "random" where both populations exist.
SuiteReport run_suite(SuiteId id, const std::string& grid = "default",
                      std::optional<std::uint64_t> seed = {},
                      const SearchLimits& lim = {});

/// Re-runs the recorded case. True means the violation reproduces.
bool replay(const Counterexample& ce);

/// Constructive sampler for cross-t-intersecting pairs: a random star pair,
/// independent member deletions, then a few right compressions applied to
/// both sides whenever the pair stays feasible. Deterministic for a fixed
/// rng state; draws use modulo only, keeping runs bit-stable across
/// platforms.
std::pair<Family, Family> random_cross_pair(std::mt19937_64& rng, int n, int r,
                                            int s, int t);

}
