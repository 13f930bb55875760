// Copyright 2026 The riskshadow Authors
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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskshadow/bench.hpp"
#include "riskshadow/catalog.hpp"
#include "riskshadow/scenario_io.hpp"
#include "riskshadow/simulator.hpp"
#include "riskshadow/svg_plot.hpp"
#include "riskshadow/trace_csv.hpp"

namespace fs = std::filesystem;
using namespace riskshadow;

namespace {

constexpr int kExitBadScenario = 2;
constexpr int kExitPlannerAbort = 3;

struct Overrides {
  std::vector<std::string> entries;  // key=value

  // Returns false on an unknown key or malformed entry.
  bool apply(Scenario& scenario, std::string& error) const {
    for (const std::string& entry : entries) {
      const auto eq = entry.find('=');
      if (eq == std::string::npos) {
        error = "override '" + entry + "' is not key=value";
        return false;
      }
      const std::string key = entry.substr(0, eq);
      const double value = std::atof(entry.c_str() + eq + 1);
      if (key == "d_thr") {
        scenario.filter_cfg.encounter.distance_threshold = value;
      } else if (key == "horizon") {
        scenario.filter_cfg.encounter.horizon = value;
        scenario.filter_cfg.reach.horizon = value;
        scenario.planner_cfg.horizon = value;
      } else if (key == "prediction_dt") {
        scenario.filter_cfg.encounter.prediction_dt = value;
      } else if (key == "safety_margin") {
        scenario.filter_cfg.reach.safety_margin = value;
      } else if (key == "slack") {
        scenario.filter_cfg.reach.no_conflict_slack = value;
      } else if (key == "extend_by_half_length") {
        scenario.filter_cfg.reach.extend_by_half_length = value != 0.0;
      } else if (key == "w_R") {
        scenario.planner_cfg.risk_weight = value;
      } else if (key == "w_U") {
        scenario.planner_cfg.utility_weight = value;
      } else if (key == "w_O") {
        scenario.planner_cfg.comfort_weight = value;
      } else if (key == "d0") {
        scenario.planner_cfg.risk_scale_d0 = value;
      } else if (key == "curve_risk") {
        scenario.planner_cfg.curve_risk_enabled = value != 0.0;
      } else {
        error = "unknown override key '" + key + "'";
        return false;
      }
    }
    return true;
  }
};

fs::path default_output_dir() {
  if (const char* env = std::getenv("RISKSHADOW_OUTPUT_DIR")) {
    return env;
  }
  return ".";
}

std::optional<Scenario> resolve_scenario(const std::string& name_or_path,
                                         std::string& error) {
  if (const CatalogEntry* entry = find_scenario(name_or_path)) {
    return entry->scenario;
  }
  const fs::path path(name_or_path);
  if (fs::exists(path)) {
    try {
      return load_scenario(path);
    } catch (const std::exception& e) {
      error = e.what();
      return std::nullopt;
    }
  }
  error = "no catalog scenario or file named '" + name_or_path + "'";
  return std::nullopt;
}

void write_text(const fs::path& file, const std::string& content) {
  std::ofstream out(file);
  if (!out) {
    throw std::runtime_error("cannot write '" + file.string() + "'");
  }
  out << content;
}

int cmd_run(const std::string& scenario_arg, const std::string& mode_arg,
            const std::string& out_dir_arg, const std::string& emit,
            const Overrides& overrides) {
  std::string error;
  std::optional<Scenario> scenario = resolve_scenario(scenario_arg, error);
  if (!scenario) {
    std::cerr << "error: " << error << "\n";
    return kExitBadScenario;
  }
  if (!overrides.apply(*scenario, error)) {
    std::cerr << "error: " << error << "\n";
    return kExitBadScenario;
  }

  std::vector<Mode> modes;
  if (mode_arg == "both") {
    modes = {Mode::kRiskShadowing, Mode::kBaseline};
  } else if (const std::optional<Mode> mode = mode_from_string(mode_arg)) {
    modes = {*mode};
  } else {
    std::cerr << "error: unknown mode '" << mode_arg << "'\n";
    return kExitBadScenario;
  }

  const bool emit_csv = emit.find("csv") != std::string::npos;
  const bool emit_svg = emit.find("svg") != std::string::npos;
  const fs::path out_dir =
      out_dir_arg.empty() ? default_output_dir() : fs::path(out_dir_arg);
  fs::create_directories(out_dir);

  std::vector<SimTrace> traces;
  for (const Mode mode : modes) {
    try {
      traces.push_back(run_scenario(*scenario, mode));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitPlannerAbort;
    }
  }

  for (const SimTrace& trace : traces) {
    const std::string stem = scenario->name + "_" + to_string(trace.mode);
    if (emit_csv) {
      write_text(out_dir / (stem + "_trace.csv"), trace_to_csv(trace));
      if (trace.mode == Mode::kRiskShadowing) {
        write_text(out_dir / (stem + "_filter.csv"),
                   filter_reports_to_csv(trace));
      }
    }
    if (emit_svg && trace.mode == Mode::kRiskShadowing) {
      write_text(out_dir / (stem + "_filter.svg"),
                 render_filter_timeline_svg(trace));
    }
  }
  if (emit_svg) {
    write_text(out_dir / (scenario->name + "_behavior.svg"),
               render_behavior_svg(traces));
  }
  std::cout << "ran " << scenario->name << " (" << traces.size()
            << " mode(s)) -> " << out_dir.string() << "\n";
  return 0;
}

int cmd_check(const std::vector<std::string>& only,
              const Overrides& overrides) {
  std::vector<const CatalogEntry*> entries;
  if (only.empty()) {
    for (const CatalogEntry& entry : catalog()) {
      entries.push_back(&entry);
    }
  } else {
    for (const std::string& name : only) {
      const CatalogEntry* entry = find_scenario(name);
      if (!entry) {
        std::cerr << "error: no catalog scenario named '" << name << "'\n";
        return kExitBadScenario;
      }
      entries.push_back(entry);
    }
  }

  std::vector<ExpectationCheck> checks;
  for (const CatalogEntry* entry : entries) {
    CatalogEntry adjusted = *entry;
    std::string error;
    if (!overrides.apply(adjusted.scenario, error)) {
      std::cerr << "error: " << error << "\n";
      return kExitBadScenario;
    }
    checks.push_back(check_entry(adjusted));
  }
  std::sort(checks.begin(), checks.end(),
            [](const ExpectationCheck& a, const ExpectationCheck& b) {
              return a.scenario < b.scenario;
            });

  bool all_passed = true;
  for (const ExpectationCheck& check : checks) {
    std::printf("%-28s %s\n", check.scenario.c_str(),
                check.passed ? "PASS" : "FAIL");
    if (!check.passed) {
      all_passed = false;
      std::printf("  first violation: %s\n", check.failures.front().c_str());
    }
  }
  return all_passed ? 0 : 1;
}

int cmd_bench(const std::vector<int>& agent_counts, std::uint64_t seed,
              int repeats) {
  std::printf("%8s %15s %12s\n", "agents", "directed_pairs", "time_ms");
  for (const int n : agent_counts) {
    const FilterBenchResult result = bench_run_filter(n, seed, repeats);
    std::printf("%8d %15d %12.3f\n", result.agents, result.directed_pairs,
                result.best_seconds * 1e3);
  }
  return 0;
}

int cmd_export(const std::string& name, const std::string& out_arg,
               bool all) {
  const fs::path out_dir =
      out_arg.empty() ? default_output_dir() : fs::path(out_arg);
  if (all) {
    fs::create_directories(out_dir);
    for (const CatalogEntry& entry : catalog()) {
      save_scenario(entry.scenario,
                    out_dir / (entry.scenario.name + ".json"));
    }
    std::cout << "exported " << catalog().size() << " scenarios to "
              << out_dir.string() << "\n";
    return 0;
  }
  const CatalogEntry* entry = find_scenario(name);
  if (!entry) {
    std::cerr << "error: no catalog scenario named '" << name << "'\n";
    return kExitBadScenario;
  }
  if (out_arg == "-") {
    std::cout << scenario_to_json(entry->scenario);
    return 0;
  }
  fs::create_directories(out_dir);
  const fs::path file = out_dir / (entry->scenario.name + ".json");
  save_scenario(entry->scenario, file);
  std::cout << "exported " << file.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"risk-shadowing traffic simulator and planning toolkit"};
  app.require_subcommand(1);

  Overrides overrides;

  auto* run = app.add_subcommand("run", "simulate a scenario and emit traces");
  std::string run_scenario_arg;
  std::string run_mode = "both";
  std::string run_out;
  std::string run_emit = "csv";
  run->add_option("scenario", run_scenario_arg,
                  "catalog scenario name or scenario file path")
      ->required();
  run->add_option("--mode", run_mode, "risk_shadowing, baseline, or both");
  run->add_option("--out", run_out,
                  "output directory (default: $RISKSHADOW_OUTPUT_DIR or .)");
  run->add_option("--emit", run_emit, "comma list of csv,svg");
  run->add_option("--override", overrides.entries,
                  "config override key=value (repeatable)");

  auto* check = app.add_subcommand(
      "check", "run catalog scenarios against their expectation records");
  std::vector<std::string> check_only;
  check->add_option("--only", check_only, "limit to named scenarios");
  check->add_option("--override", overrides.entries,
                    "config override key=value (repeatable)");

  auto* bench = app.add_subcommand(
      "bench", "time the pairwise filter sweep on synthetic scenes");
  std::vector<int> bench_n = {2, 4, 8, 16, 32};
  std::uint64_t bench_seed = 42;
  int bench_repeats = 3;
  bench->add_option("--n", bench_n, "agent counts")->delimiter(',');
  bench->add_option("--seed", bench_seed, "scene RNG seed");
  bench->add_option("--repeat", bench_repeats, "timings per count (best wins)");

  auto* export_cmd = app.add_subcommand(
      "export-scenario", "write a built-in scenario as a JSON file");
  std::string export_name;
  std::string export_out;
  bool export_all = false;
  export_cmd->add_option("name", export_name, "catalog scenario name");
  export_cmd->add_option("--out", export_out,
                         "output directory, or '-' for stdout");
  export_cmd->add_flag("--all", export_all, "export the whole catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_scenario_arg, run_mode, run_out, run_emit, overrides);
    }
    if (check->parsed()) {
      return cmd_check(check_only, overrides);
    }
    if (bench->parsed()) {
      for (const int n : bench_n) {
        if (n < 2) {
          std::cerr << "error: bench needs n >= 2\n";
          return kExitBadScenario;
        }
      }
      return cmd_bench(bench_n, bench_seed, bench_repeats);
    }
    if (export_cmd->parsed()) {
      if (!export_all && export_name.empty()) {
        std::cerr << "error: export-scenario needs a name or --all\n";
        return kExitBadScenario;
      }
      return cmd_export(export_name, export_out, export_all);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
