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

// Calibration and diagnostics harness: prints, for one catalog scenario, the
// filter timeline, the ego behavior in both modes, minimum separations, and
// pass/fail for each expectation clause. Used to pin the scenario geometry
// and the default planner weights that are checked into the catalog.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "riskshadow/catalog.hpp"
#include "riskshadow/simulator.hpp"

using namespace riskshadow;

namespace {

void print_filter_timeline(const SimTrace& trace) {
  std::map<std::string, std::string> rows;
  std::vector<double> times;
  for (const StepRecord& step : trace.steps) {
    if (!step.filter) continue;
    times.push_back(step.time);
    for (const FilterDecision& d : step.filter->decisions) {
      char c = d.filtered ? 'F' : (d.reason == FilterReason::kAlreadyPassed
                                       ? 'p'
                                       : '.');
      rows[d.other_id] += c;
    }
  }
  std::printf("filter timeline (F=filtered, .=kept, p=already_passed):\n");
  for (const auto& [id, row] : rows) {
    std::printf("  %-6s %s\n", id.c_str(), row.c_str());
  }
  if (!times.empty()) {
    std::printf("  t      0        1         2         3         4         5"
                "         6         7         8         9\n");
  }
}

void print_behavior(const SimTrace& trace) {
  std::printf("%s ego (t, v, a):\n  ", to_string(trace.mode).c_str());
  for (std::size_t k = 0; k < trace.steps.size(); k += 5) {
    const StepRecord& step = trace.steps[k];
    for (const AgentRecord& agent : step.agents) {
      if (agent.id == trace.ego_id) {
        std::printf("(%.1f %.2f %+.2f) ", step.time, agent.speed, agent.accel);
      }
    }
    if ((k / 5) % 4 == 3) std::printf("\n  ");
  }
  std::printf("\n");
  double min_sep = 1e18;
  double at = 0.0;
  std::string who;
  for (const StepRecord& step : trace.steps) {
    for (const PairDistance& pair : step.pair_distances) {
      if (pair.first_id != trace.ego_id && pair.second_id != trace.ego_id) {
        continue;
      }
      if (pair.distance < min_sep) {
        min_sep = pair.distance;
        at = step.time;
        who = pair.first_id == trace.ego_id ? pair.second_id : pair.first_id;
      }
    }
  }
  std::printf("  min ego separation: %.3f m (vs %s at t=%.1f)\n", min_sep,
              who.c_str(), at);
  double max_a = 0.0;
  double min_a = 0.0;
  for (const StepRecord& step : trace.steps) {
    for (const AgentRecord& agent : step.agents) {
      if (agent.id == trace.ego_id) {
        max_a = std::max(max_a, agent.accel);
        min_a = std::min(min_a, agent.accel);
      }
    }
  }
  std::printf("  ego accel range: [%+.3f, %+.3f]\n", min_a, max_a);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> names;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) names.emplace_back(argv[i]);
  } else {
    for (const CatalogEntry& entry : catalog()) {
      names.push_back(entry.scenario.name);
    }
  }

  int failures = 0;
  for (const std::string& name : names) {
    const CatalogEntry* entry = find_scenario(name);
    if (!entry) {
      std::fprintf(stderr, "unknown scenario '%s'\n", name.c_str());
      return 2;
    }
    std::printf("=== %s ===\n", name.c_str());
    const SimTrace rs = run_scenario(entry->scenario, Mode::kRiskShadowing);
    print_filter_timeline(rs);
    print_behavior(rs);
    const SimTrace bl = run_scenario(entry->scenario, Mode::kBaseline);
    print_behavior(bl);

    const ExpectationCheck check = check_entry(*entry);
    if (check.passed) {
      std::printf("expectation: PASS\n\n");
    } else {
      ++failures;
      std::printf("expectation: FAIL\n");
      for (const std::string& failure : check.failures) {
        std::printf("  - %s\n", failure.c_str());
      }
      std::printf("\n");
    }
  }
  return failures == 0 ? 0 : 1;
}
