#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossfam/bounds.hpp"
#include "crossfam/compression.hpp"
#include "crossfam/intersection.hpp"
#include "crossfam/json_io.hpp"
#include "crossfam/search.hpp"
#include "crossfam/verify.hpp"
#include "crossfam/version.hpp"

namespace {

using namespace crossfam;
using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void emit_json(const json& j, const std::string& file) {
  std::cout << j.dump(2) << '\n';
  if (!file.empty()) spill(file, j.dump(2) + "\n");
}

std::vector<int> parse_uniformities(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("--k-uniformities: '" + tok +
                                  "' is not an integer");
    }
    if (used != tok.size())
      throw std::invalid_argument("--k-uniformities: '" + tok +
                                  "' is not an integer");
    out.push_back(value);
  }
  if (out.size() < 2)
    throw std::invalid_argument(
        "--k-uniformities needs at least two comma-separated sizes");
  return out;
}

int pick_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CROSSFAM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 1;
}

// (r, s) = two largest uniformities; the threshold only depends on those
std::pair<int, int> top_two(std::vector<int> rs) {
  std::sort(rs.begin(), rs.end());
  return {rs[rs.size() - 2], rs.back()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for cross-intersecting uniform set families"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // ---- n0 ----
  auto* c_n0 = app.add_subcommand(
      "n0", "print the universe size threshold for the product bound");
  int n0_r = 0, n0_s = 0, n0_t = 0;
  std::string n0_k, n0_json;
  c_n0->add_option("--r", n0_r, "smaller uniformity");
  c_n0->add_option("--s", n0_s, "larger uniformity");
  c_n0->add_option("--t", n0_t, "intersection size")->required();
  c_n0->add_option("--k-uniformities", n0_k,
                   "comma-separated uniformities; the two largest are used");
  c_n0->add_option("--json", n0_json, "also write a JSON record to this file");

  // ---- bound ----
  auto* c_bound = app.add_subcommand(
      "bound", "print the star product bound and whether the threshold applies");
  int b_n = 0, b_r = 0, b_s = 0, b_t = 0;
  std::string b_k, b_json;
  c_bound->add_option("--n", b_n, "universe size")->required();
  c_bound->add_option("--r", b_r, "first uniformity");
  c_bound->add_option("--s", b_s, "second uniformity");
  c_bound->add_option("--t", b_t, "intersection size")->required();
  c_bound->add_option("--k-uniformities", b_k, "comma-separated uniformities");
  c_bound->add_option("--json", b_json, "also write a JSON record to this file");

  // ---- compress ----
  auto* c_comp = app.add_subcommand(
      "compress", "replace a family (or a pair) by its compression fixpoint");
  int cp_n = 0, cp_t = 0;
  std::string cp_in, cp_pair, cp_trace, cp_out, cp_out_pair;
  c_comp->add_option("--n", cp_n, "universe size")->required();
  c_comp->add_option("--input", cp_in, "family file")->required();
  c_comp->add_option("--pair", cp_pair,
                     "second family file; compresses the pair simultaneously");
  c_comp->add_option("--t", cp_t,
                     "when given, the trace records whether the input and "
                     "output are (cross-)t-intersecting");
  c_comp->add_option("--trace", cp_trace, "write the step trace as JSON here");
  c_comp->add_option("--output", cp_out,
                     "output file for the (first) family; stdout if omitted");
  c_comp->add_option("--output-pair", cp_out_pair,
                     "output file for the second family; stdout if omitted");

  // ---- check ----
  auto* c_check = app.add_subcommand(
      "check", "test a property of families; exit 0 holds, 1 violated");
  int ck_n = 0, ck_t = 0;
  std::string ck_mode, ck_in, ck_pair, ck_json;
  c_check->add_option("--n", ck_n, "universe size")->required();
  c_check->add_option("--t", ck_t, "intersection size");
  c_check
      ->add_option("--mode", ck_mode,
                   "t-intersecting | cross | compressed")
      ->required();
  c_check->add_option("--input", ck_in, "family file")->required();
  c_check->add_option("--pair", ck_pair, "second family file (cross mode)");
  c_check->add_option("--json", ck_json, "also write the verdict to this file");

  // ---- search ----
  auto* c_search = app.add_subcommand(
      "search", "exact maximization of the size product over feasible families");
  int se_n = 0, se_r = 0, se_s = 0, se_t = 0, se_threads = 0;
  std::uint64_t se_guard = 0, se_seed = 0;
  std::string se_k, se_mode = "closure", se_json;
  bool se_all = false;
  c_search->add_option("--n", se_n, "universe size")->required();
  c_search->add_option("--r", se_r, "first uniformity");
  c_search->add_option("--s", se_s, "second uniformity");
  c_search->add_option("--t", se_t, "intersection size")->required();
  c_search->add_option("--k-uniformities", se_k, "comma-separated uniformities");
  c_search->add_option("--mode", se_mode, "brute | closure | compressed");
  c_search->add_flag("--all-optima", se_all,
                     "include every optimal tuple in the report");
  c_search->add_option("--guard", se_guard,
                       "override the layer-size guards for this run");
  c_search->add_option("--threads", se_threads,
                       "worker threads (default: CROSSFAM_THREADS or 1)");
  auto* se_seed_opt =
      c_search->add_option("--seed", se_seed, "echoed into the report");
  c_search->add_option("--json", se_json, "also write the report to this file");

  // ---- verify ----
  auto* c_verify = app.add_subcommand(
      "verify",
      "check the product bound on one instance, run a property suite, or "
      "replay a counterexample");
  int ve_n = 0, ve_r = 0, ve_s = 0, ve_t = 0, ve_threads = 0;
  std::uint64_t ve_guard = 0, ve_seed = 0;
  std::string ve_k, ve_mode = "closure", ve_suite, ve_grid = "default",
              ve_replay, ve_json;
  bool ve_all = false;
  c_verify->add_option("--n", ve_n, "universe size");
  c_verify->add_option("--r", ve_r, "first uniformity");
  c_verify->add_option("--s", ve_s, "second uniformity");
  c_verify->add_option("--t", ve_t, "intersection size");
  c_verify->add_option("--k-uniformities", ve_k, "comma-separated uniformities");
  c_verify->add_option("--mode", ve_mode, "brute | closure | compressed");
  c_verify->add_option("--suite", ve_suite,
                       "lemma21i | lemma21ii | lemma31 | lemma32 | theorem");
  c_verify->add_option("--grid", ve_grid,
                       "suite grid: default | exhaustive | random "
                       "(theorem: default | default-tiny)");
  c_verify->add_option("--replay", ve_replay,
                       "re-run the counterexample stored in this JSON file");
  c_verify->add_flag("--all-optima", ve_all,
                     "include every optimal tuple in instance reports");
  c_verify->add_option("--guard", ve_guard,
                       "override the layer-size guards for this run");
  c_verify->add_option("--threads", ve_threads,
                       "worker threads (default: CROSSFAM_THREADS or 1)");
  auto* ve_seed_opt =
      c_verify->add_option("--seed", ve_seed, "seed for randomized grids");
  c_verify->add_option("--json", ve_json, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_n0)) {
      int r = n0_r, s = n0_s;
      if (!n0_k.empty()) std::tie(r, s) = top_two(parse_uniformities(n0_k));
      if (r <= 0 || s <= 0)
        throw std::invalid_argument("n0 needs --r and --s (or --k-uniformities)");
      BigCount n0 = n0_threshold(r, s, n0_t);
      std::cout << to_decimal(n0) << '\n';
      if (!n0_json.empty()) {
        json j{{"version", kVersion}, {"r", r}, {"s", s}, {"t", n0_t},
               {"n0", to_decimal(n0)}};
        spill(n0_json, j.dump(2) + "\n");
      }
      return 0;
    }

    if (app.got_subcommand(c_bound)) {
      Params p = !b_k.empty() ? Params(b_n, parse_uniformities(b_k), b_t)
                              : Params(b_n, b_r, b_s, b_t);
      BigCount bound = pair_bound(p);
      bool applicable = threshold_applicable(p);
      std::cout << to_decimal(bound) << '\n'
                << "applicable=" << (applicable ? "true" : "false") << '\n';
      if (!b_json.empty()) {
        auto [r, s] = p.top_two();
        json j{{"version", kVersion},
               {"params", params_to_json(p)},
               {"bound", to_decimal(bound)},
               {"n0", to_decimal(n0_threshold(r, s, p.t))},
               {"threshold_applicable", applicable}};
        spill(b_json, j.dump(2) + "\n");
      }
      return 0;
    }

    if (app.got_subcommand(c_comp)) {
      Family a = read_family(slurp(cp_in), cp_n);
      if (!cp_pair.empty()) {
        Family b = read_family(slurp(cp_pair), cp_n);
        auto [fa, fb, trace] = compress_pair_to_fixpoint(a, b);
        std::string text_a = write_family(fa);
        std::string text_b = write_family(fb);
        if (!cp_out.empty())
          spill(cp_out, text_a);
        else
          std::cout << "# a\n" << text_a;
        if (!cp_out_pair.empty())
          spill(cp_out_pair, text_b);
        else
          std::cout << "# b\n" << text_b;
        if (!cp_trace.empty()) {
          json tj = trace_to_json(trace);
          if (cp_t > 0) {
            tj["t"] = cp_t;
            tj["cross_t_intersecting_before"] =
                is_cross_t_intersecting(a, b, cp_t);
            tj["cross_t_intersecting_after"] =
                is_cross_t_intersecting(fa, fb, cp_t);
          }
          spill(cp_trace, tj.dump(2) + "\n");
        }
      } else {
        auto [fa, trace] = compress_to_fixpoint(a);
        std::string text = write_family(fa);
        if (!cp_out.empty())
          spill(cp_out, text);
        else
          std::cout << text;
        if (!cp_trace.empty()) {
          json tj = trace_to_json(trace);
          if (cp_t > 0) {
            tj["t"] = cp_t;
            tj["t_intersecting_before"] = is_t_intersecting(a, cp_t);
            tj["t_intersecting_after"] = is_t_intersecting(fa, cp_t);
          }
          spill(cp_trace, tj.dump(2) + "\n");
        }
      }
      return 0;
    }

    if (app.got_subcommand(c_check)) {
      Family f = read_family(slurp(ck_in), ck_n);
      json verdict{{"version", kVersion}, {"mode", ck_mode}, {"n", ck_n}};
      bool holds = false;
      if (ck_mode == "t-intersecting") {
        if (ck_t < 1) throw std::invalid_argument("--t is required and positive");
        verdict["t"] = ck_t;
        auto violation = find_t_violation(f, ck_t);
        holds = !violation;
        verdict["witness"] =
            violation ? json{{"a", violation->first.elements()},
                             {"b", violation->second.elements()}}
                      : json(nullptr);
      } else if (ck_mode == "cross") {
        if (ck_t < 1) throw std::invalid_argument("--t is required and positive");
        if (ck_pair.empty())
          throw std::invalid_argument("cross mode needs --pair");
        verdict["t"] = ck_t;
        Family g = read_family(slurp(ck_pair), ck_n);
        auto violation = find_cross_violation(f, g, ck_t);
        holds = !violation;
        verdict["witness"] =
            violation ? json{{"a", violation->first.elements()},
                             {"b", violation->second.elements()}}
                      : json(nullptr);
      } else if (ck_mode == "compressed") {
        auto idx = first_changing_left_index(f);
        holds = !idx;
        verdict["witness"] =
            idx ? json{{"i", idx->i}, {"j", idx->j}} : json(nullptr);
      } else {
        throw std::invalid_argument("unknown check mode '" + ck_mode + "'");
      }
      verdict["holds"] = holds;
      emit_json(verdict, ck_json);
      return holds ? 0 : 1;
    }

    if (app.got_subcommand(c_search)) {
      auto mode = search_mode_from_string(se_mode);
      if (!mode) throw std::invalid_argument("unknown mode '" + se_mode + "'");
      Params p = !se_k.empty() ? Params(se_n, parse_uniformities(se_k), se_t)
                               : Params(se_n, se_r, se_s, se_t);
      SearchLimits lim;
      if (se_guard > 0) {
        lim.brute_layer_guard = se_guard;
        lim.bnb_layer_guard = se_guard;
        lim.k_layer_product_guard = std::max(lim.k_layer_product_guard, se_guard);
      }
      lim.threads = pick_threads(se_threads);
      std::optional<std::uint64_t> seed;
      if (se_seed_opt->count() > 0) seed = se_seed;
      TheoremVerdict v = verify_theorem(p, *mode, lim);
      emit_json(verdict_to_json(v, seed, se_all), se_json);
      return 0;
    }

    if (app.got_subcommand(c_verify)) {
      SearchLimits lim;
      if (ve_guard > 0) {
        lim.brute_layer_guard = ve_guard;
        lim.bnb_layer_guard = ve_guard;
        lim.k_layer_product_guard = std::max(lim.k_layer_product_guard, ve_guard);
      }
      lim.threads = pick_threads(ve_threads);
      std::optional<std::uint64_t> seed;
      if (ve_seed_opt->count() > 0) seed = ve_seed;

      if (!ve_replay.empty()) {
        Counterexample ce = counterexample_from_json(json::parse(slurp(ve_replay)));
        bool reproduced = replay(ce);
        emit_json(json{{"version", kVersion},
                       {"suite", ce.suite},
                       {"reproduced", reproduced}},
                  ve_json);
        return reproduced ? 1 : 0;
      }

      if (!ve_suite.empty()) {
        auto id = suite_from_string(ve_suite);
        if (!id) throw std::invalid_argument("unknown suite '" + ve_suite + "'");
        SuiteReport rep = run_suite(*id, ve_grid, seed, lim);
        emit_json(suite_to_json(rep), ve_json);
        return rep.cases_run == rep.cases_passed ? 0 : 1;
      }

      auto mode = search_mode_from_string(ve_mode);
      if (!mode) throw std::invalid_argument("unknown mode '" + ve_mode + "'");
      if (ve_n <= 0 || ve_t <= 0)
        throw std::invalid_argument(
            "verify needs --suite, --replay, or an instance (--n --t with "
            "--r/--s or --k-uniformities)");
      Params p = !ve_k.empty() ? Params(ve_n, parse_uniformities(ve_k), ve_t)
                               : Params(ve_n, ve_r, ve_s, ve_t);
      TheoremVerdict v = verify_theorem(p, *mode, lim);
      bool passed = v.bound_holds &&
                    (!v.threshold_applicable ||
                     (v.bound_tight && v.uniqueness.value_or(true)));
      json out = verdict_to_json(v, seed, ve_all);
      out["passed"] = passed;
      emit_json(out, ve_json);
      return passed ? 0 : 1;
    }
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
