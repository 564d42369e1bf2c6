#include "crossfam/json_io.hpp"

#include "crossfam/version.hpp"

namespace crossfam {

using nlohmann::json;

json family_to_json(const Family& f) {
  json out = json::array();
  for (const auto& s : f) out.push_back(s.elements());
  return out;
}

json params_to_json(const Params& p) {
  json out{{"n", p.n}, {"t", p.t}};
  if (p.is_k_ary())
    out["uniformities"] = p.uniformities;
  else {
    out["r"] = p.r;
    out["s"] = p.s;
  }
  return out;
}

json trace_to_json(const CompressionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    const char* which = step.changed_a && step.changed_b ? "both"
                        : step.changed_a               ? "a"
                                                       : "b";
    steps.push_back(json{{"i", step.index.i}, {"j", step.index.j},
                         {"changed", which}});
  }
  return json{{"steps", std::move(steps)},
              {"sweeps", trace.sweeps},
              {"initial_potential", to_decimal(trace.initial_potential)},
              {"final_potential", to_decimal(trace.final_potential)}};
}

namespace {

json witness_to_json(const SearchWitness& w) {
  json families = json::array();
  for (const auto& f : w.families) families.push_back(family_to_json(f));
  json out{{"families", std::move(families)}};
  if (w.common_root)
    out["common_root"] = w.common_root->elements();
  else
    out["common_root"] = nullptr;
  return out;
}

}  // namespace

json report_to_json(const Params& p, const SearchReport& rep,
                    std::optional<std::uint64_t> seed, bool include_witnesses) {
  json out{{"version", kVersion},
           {"params", params_to_json(p)},
           {"mode", to_string(rep.mode)},
           {"optimum", to_decimal(rep.optimum)},
           {"witness_count", rep.witness_total},
           {"witnesses_truncated", rep.witnesses_truncated},
           {"all_witnesses_are_star_tuples", rep.all_witnesses_are_star_tuples},
           {"nodes_explored", rep.nodes_explored}};
  if (include_witnesses) {
    json ws = json::array();
    for (const auto& w : rep.witnesses) ws.push_back(witness_to_json(w));
    out["witnesses"] = std::move(ws);
  }
  if (seed)
    out["seed"] = *seed;
  else
    out["seed"] = nullptr;
  return out;
}

json verdict_to_json(const TheoremVerdict& v,
                     std::optional<std::uint64_t> seed, bool include_witnesses) {
  json out = report_to_json(v.params, v.report, seed, include_witnesses);
  out["bound"] = to_decimal(v.bound);
  out["bound_holds"] = v.bound_holds;
  out["bound_tight"] = v.bound_tight;
  if (v.uniqueness)
    out["uniqueness"] = *v.uniqueness;
  else
    out["uniqueness"] = nullptr;
  out["threshold_applicable"] = v.threshold_applicable;
  return out;
}

json counterexample_to_json(const Counterexample& ce) {
  json fams = json::object();
  for (const auto& [label, fam] : ce.families) fams[label] = family_to_json(fam);
  json out{{"suite", ce.suite},
           {"detail", ce.detail},
           {"params", json{{"n", ce.n}, {"r", ce.r}, {"s", ce.s},
                           {"t", ce.t}, {"p", ce.p}}},
           {"families", std::move(fams)}};
  if (ce.index)
    out["index"] = json{{"i", ce.index->i}, {"j", ce.index->j}};
  else
    out["index"] = nullptr;
  return out;
}

Counterexample counterexample_from_json(const json& j) {
  Counterexample ce;
  ce.suite = j.at("suite").get<std::string>();
  ce.detail = j.value("detail", std::string{});
  const json& p = j.at("params");
  ce.n = p.at("n").get<int>();
  ce.r = p.at("r").get<int>();
  ce.s = p.at("s").get<int>();
  ce.t = p.at("t").get<int>();
  ce.p = p.value("p", 0);
  if (j.contains("index") && !j.at("index").is_null()) {
    ce.index = CompressionIndex{j.at("index").at("i").get<int>(),
                                j.at("index").at("j").get<int>()};
  }
  if (j.contains("families")) {
    for (const auto& [label, arr] : j.at("families").items()) {
      std::vector<ElementSet> sets;
      for (const auto& set_json : arr) {
        std::vector<int> elems;
        for (const auto& e : set_json) elems.push_back(e.get<int>());
        sets.emplace_back(ce.n, elems);
      }
      ce.families.emplace_back(label, Family(ce.n, std::move(sets)));
    }
  }
  return ce;
}

json suite_to_json(const SuiteReport& rep) {
  json out{{"version", kVersion},
           {"suite", rep.suite},
           {"grid", rep.grid},
           {"cases_run", rep.cases_run},
           {"cases_passed", rep.cases_passed},
           {"passed", rep.cases_run == rep.cases_passed},
           {"wall_ms", rep.wall_ms}};
  if (rep.first_counterexample)
    out["first_counterexample"] = counterexample_to_json(*rep.first_counterexample);
  else
    out["first_counterexample"] = nullptr;
  if (rep.seed)
    out["seed"] = *rep.seed;
  else
    out["seed"] = nullptr;
  return out;
}

}
