// Copyright 2026 The panint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// panint: compute pan/Choquet/concave integrals, check capacity properties,
// run law suites and search for counterexamples. All output is JSON.
//
// Exit codes: 0 success, 1 input error, 2 violation found by `verify`.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <panint/json_io.hpp>
#include <panint/panint.hpp>

namespace {

using namespace panint;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_violation = 2;

struct CliConfig {
  std::string capacity_path;
  std::string function_path;
  std::string output_path;
  std::string kind = "pan";
  std::string suite = "all";
  std::string mode = "additivity";
  std::vector<std::string> families;
  double p = 1.0;
  std::size_t trials = 500;
  std::size_t budget = 10000;
  std::uint64_t seed = 1;
  unsigned n = 0;
  unsigned n_min = 2;
  unsigned n_max = 8;
  bool exact = false;
  bool witness = false;
  bool signed_search = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw error(errc::parse_error, "cannot write " + path);
    }
  }
  void emit(const json& j) { (file_.is_open() ? file_ : std::cout) << j.dump(2) << '\n'; }

 private:
  std::ofstream file_;
};

template <Scalar T>
Capacity<T> load_capacity(const std::string& path) {
  return capacity_from_json<T>(read_json_file(path));
}

template <Scalar T>
RealFunction<T> load_function(const std::string& path, const FiniteSpace& space) {
  return function_from_json<T>(read_json_file(path), space);
}

template <Scalar T>
json compute(const CliConfig& cfg) {
  const auto mu = load_capacity<T>(cfg.capacity_path);
  const auto f = load_function<T>(cfg.function_path, mu.space());
  std::optional<IntegralResult<T>> result;
  if (cfg.kind == "pan") {
    result = pan_pos(f, mu);
  } else if (cfg.kind == "pan-signed") {
    result = pan_signed(f, mu);
  } else if (cfg.kind == "choquet") {
    result = choquet_pos(f, mu);
  } else if (cfg.kind == "choquet-asym") {
    result = IntegralResult<T>{choquet_asymmetric(f, mu), Engine::sorted_levels, {}, std::nullopt};
  } else if (cfg.kind == "choquet-sym") {
    result = IntegralResult<T>{choquet_symmetric(f, mu), Engine::sorted_levels, {}, std::nullopt};
  } else if (cfg.kind == "concave") {
    result = concave_integral(f, mu);
  }
  json out = {{"kind", cfg.kind},
              {"mode", scalar_traits<T>::mode_name},
              {"value", scalar_to_json(result->value)},
              {"engine", engine_name(result->engine)}};
  if (cfg.witness) out["witness"] = witness_to_json(*result);
  return out;
}

template <Scalar T>
json check(const CliConfig& cfg) {
  const auto mu = load_capacity<T>(cfg.capacity_path);
  json atoms = json::array();
  for (Subset a : minimal_atoms(mu)) atoms.push_back(subset_to_json(a));
  return {{"points", mu.points()},
          {"mode", scalar_traits<T>::mode_name},
          {"monotone", true},
          {"subadditive", property_to_json(is_subadditive(mu))},
          {"submodular", property_to_json(is_submodular(mu))},
          {"supermodular", property_to_json(is_supermodular(mu))},
          {"null_additive", property_to_json(is_null_additive(mu))},
          {"minimal_atoms", std::move(atoms)}};
}

template <Scalar T>
json norm(const CliConfig& cfg) {
  const auto mu = load_capacity<T>(cfg.capacity_path);
  const auto f = load_function<T>(cfg.function_path, mu.space());
  return {{"p", cfg.p}, {"norm", p_norm(f, mu, cfg.p)}};
}

std::vector<Family> parse_families(const std::vector<std::string>& names) {
  std::vector<Family> out;
  for (const auto& name : names) {
    auto fam = parse_family(name);
    if (!fam) throw error(errc::parse_error, "unknown family " + name);
    out.push_back(*fam);
  }
  return out;
}

template <Scalar T>
std::pair<json, bool> verify(const CliConfig& cfg) {
  std::vector<Suite> suites;
  if (cfg.suite == "all") {
    suites.assign(std::begin(all_suites), std::end(all_suites));
  } else if (cfg.suite == "disjoint") {
    suites = {Suite::disjoint_superadditivity, Suite::disjoint_additivity};
  } else if (auto s = parse_suite(cfg.suite)) {
    suites = {*s};
  } else {
    throw error(errc::parse_error, "unknown suite " + cfg.suite);
  }

  SuiteConfig<T> sc;
  sc.trials = cfg.trials;
  sc.seed = cfg.seed;
  sc.n_min = cfg.n ? cfg.n : cfg.n_min;
  sc.n_max = cfg.n ? cfg.n : cfg.n_max;
  if (sc.n_min < 1 || sc.n_max > 16 || sc.n_min > sc.n_max) throw error(errc::bad_space, "need 1 <= n_min <= n_max <= 16");
  sc.families = parse_families(cfg.families);
  if (!cfg.capacity_path.empty()) sc.capacity = load_capacity<T>(cfg.capacity_path);

  json reports = json::array();
  bool clean = true;
  for (Suite s : suites) {
    auto r = run_suite(s, sc);
    clean = clean && r.passed();
    reports.push_back(report_to_json(r));
  }
  if (reports.size() == 1) return {std::move(reports[0]), clean};
  return {json{{"reports", std::move(reports)}}, clean};
}

template <Scalar T>
json search(const CliConfig& cfg) {
  const auto mu = load_capacity<T>(cfg.capacity_path);
  if (cfg.mode == "additivity") {
    std::optional<RealFunction<T>> base;
    if (!cfg.function_path.empty()) base = load_function<T>(cfg.function_path, mu.space());
    const bool signed_values = cfg.signed_search || (base && !base->nonnegative());
    auto found = find_additivity_counterexample(
        mu, cfg.budget, cfg.seed, signed_values ? SearchMode::signed_values : SearchMode::nonnegative, base);
    if (!found) return {{"found", false}, {"mode", cfg.mode}};
    return {{"found", true},
            {"mode", cfg.mode},
            {"candidates", found->candidates},
            {"f", function_to_json(found->f)},
            {"g", function_to_json(found->g)},
            {"lhs", scalar_to_json(found->lhs)},
            {"rhs", scalar_to_json(found->rhs)}};
  }
  if (cfg.mode == "comonotone") {
    auto res = find_comonotone_counterexample(mu, cfg.budget, cfg.seed);
    json out = {{"found", res.witness.has_value()},
                {"mode", cfg.mode},
                {"examined", res.examined},
                {"choquet_mismatches", res.choquet_mismatches}};
    if (res.witness) {
      out["f"] = function_to_json(res.witness->f);
      out["g"] = function_to_json(res.witness->g);
      out["lhs"] = scalar_to_json(res.witness->lhs);
      out["rhs"] = scalar_to_json(res.witness->rhs);
    }
    return out;
  }
  throw error(errc::parse_error, "unknown search mode " + cfg.mode);
}

template <Scalar T>
int dispatch(const std::string& command, const CliConfig& cfg, Output& out) {
  if (command == "compute") {
    out.emit(compute<T>(cfg));
  } else if (command == "check") {
    out.emit(check<T>(cfg));
  } else if (command == "norm") {
    out.emit(norm<T>(cfg));
  } else if (command == "verify") {
    auto [report, clean] = verify<T>(cfg);
    out.emit(report);
    return clean ? exit_ok : exit_violation;
  } else if (command == "search") {
    out.emit(search<T>(cfg));
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Pan-integrals over finite capacities"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output_path, "Write JSON here instead of standard output");
  };
  auto add_exact = [&](CLI::App* sub) { sub->add_flag("--exact", cfg.exact, "Rational arithmetic"); };

  auto* compute_cmd = app.add_subcommand("compute", "Integrate a function against a capacity");
  compute_cmd->add_option("-c,--capacity", cfg.capacity_path, "Capacity JSON")->required();
  compute_cmd->add_option("-f,--function", cfg.function_path, "Function JSON")->required();
  compute_cmd->add_option("-k,--kind", cfg.kind, "Integral")
      ->check(CLI::IsMember({"pan", "pan-signed", "choquet", "choquet-sym", "choquet-asym", "concave"}));
  compute_cmd->add_flag("--witness", cfg.witness, "Include the optimal partition / chain / dual weights");
  add_exact(compute_cmd);
  add_output(compute_cmd);

  auto* check_cmd = app.add_subcommand("check", "Report capacity properties and minimal atoms");
  check_cmd->add_option("-c,--capacity", cfg.capacity_path, "Capacity JSON")->required();
  add_exact(check_cmd);
  add_output(check_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "The p-norm (pan |f|^p)^(1/p)");
  norm_cmd->add_option("-c,--capacity", cfg.capacity_path, "Capacity JSON")->required();
  norm_cmd->add_option("-f,--function", cfg.function_path, "Function JSON")->required();
  norm_cmd->add_option("-p,--p", cfg.p, "Exponent p >= 1");
  add_exact(norm_cmd);
  add_output(norm_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run randomized law suites");
  verify_cmd->add_option("-s,--suite", cfg.suite, "Suite name, disjoint, or all");
  verify_cmd->add_option("-t,--trials", cfg.trials, "Trials per suite");
  verify_cmd->add_option("--seed", cfg.seed, "Base seed; trial i uses seed + i");
  verify_cmd->add_option("-n,--n", cfg.n, "Fixed number of points");
  verify_cmd->add_option("--n-min", cfg.n_min, "Smallest number of points");
  verify_cmd->add_option("--n-max", cfg.n_max, "Largest number of points");
  verify_cmd->add_option("--family", cfg.families, "Capacity family (repeatable)");
  verify_cmd->add_option("-c,--capacity", cfg.capacity_path, "Use this capacity in every trial");
  add_exact(verify_cmd);
  add_output(verify_cmd);

  auto* search_cmd = app.add_subcommand("search", "Look for additivity / comonotone counterexamples");
  search_cmd->add_option("-c,--capacity", cfg.capacity_path, "Capacity JSON")->required();
  search_cmd->add_option("-m,--mode", cfg.mode, "additivity or comonotone")
      ->check(CLI::IsMember({"additivity", "comonotone"}));
  search_cmd->add_option("-b,--budget", cfg.budget, "Maximum pairs examined");
  search_cmd->add_option("--seed", cfg.seed, "Seed for the random stage");
  search_cmd->add_option("-f,--function", cfg.function_path, "Split this function first (additivity)");
  search_cmd->add_flag("--signed", cfg.signed_search, "Search signed functions");
  add_exact(search_cmd);
  add_output(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"error", "Usage"}, {"message", e.what()}}.dump(2) << '\n';
    return exit_input;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Output out(cfg.output_path);
    return cfg.exact ? dispatch<Rational>(command, cfg, out) : dispatch<double>(command, cfg, out);
  } catch (const error& e) {
    std::cout << error_to_json(e).dump(2) << '\n';
    return exit_input;
  }
}
