#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "crossfam/compression.hpp"
#include "crossfam/family.hpp"
#include "crossfam/params.hpp"
#include "crossfam/search.hpp"
#include "crossfam/verify.hpp"

namespace crossfam {

// Wire conventions: values that can exceed 64 bits (bounds, optima,
// potentials) travel as decimal strings; plain counts stay JSON integers.

nlohmann::json family_to_json(const Family& f);
nlohmann::json params_to_json(const Params& p);

nlohmann::json trace_to_json(const CompressionTrace& tr);

nlohmann::json report_to_json(const Params& p, const SearchReport& rep,
                              std::optional<std::uint64_t> seed,
                              bool include_witnesses);

nlohmann::json verdict_to_json(const TheoremVerdict& v,
                               std::optional<std::uint64_t> seed,
                               bool include_witnesses);

nlohmann::json suite_to_json(const SuiteReport& rep);

nlohmann::json counterexample_to_json(const Counterexample& ce);
Counterexample counterexample_from_json(const nlohmann::json& j);

}
