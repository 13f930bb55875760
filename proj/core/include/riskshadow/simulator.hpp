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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riskshadow/agent.hpp"
#include "riskshadow/filter.hpp"
#include "riskshadow/planner.hpp"

namespace riskshadow {

enum class Mode {
  kRiskShadowing,  // filter first, plan on the reduced agent set
  kBaseline,       // plan on the full agent set
};

std::string to_string(Mode mode);
std::optional<Mode> mode_from_string(const std::string& name);

/// Piecewise-constant acceleration script: `accel` applies from `t_start`
/// until the next entry. Before the first entry the acceleration is 0.
struct ScheduleEntry {
  double t_start = 0.0;
  double accel = 0.0;
};

struct ScriptedAgent {
  AgentState initial;
  std::vector<ScheduleEntry> schedule;  // sorted by t_start
};

struct Scenario {
  std::string name;
  std::vector<ScriptedAgent> agents;  // the ego's schedule, if any, is ignored
  std::string ego_id;
  double duration = 10.0;  // s
  double sim_dt = 0.1;     // s
  Mode mode = Mode::kRiskShadowing;
  FilterConfig filter_cfg;
  PlannerConfig planner_cfg;
};

/// Throws std::invalid_argument on a missing ego, duplicate ids, unsorted
/// schedules, or non-positive timing.
void validate(const Scenario& scenario);

struct AgentRecord {
  std::string id;
  double arclength = 0.0;
  double speed = 0.0;
  double accel = 0.0;  // realized over [time, time + dt]
  Pose2D pose;
};

struct PairDistance {
  std::string first_id;
  std::string second_id;
  double distance = 0.0;  // shape-to-shape at this step
};

struct StepRecord {
  double time = 0.0;
  std::vector<AgentRecord> agents;  // scenario order
  std::optional<FilterReport> filter;  // risk-shadowing mode only
  int chosen_profile_id = 0;
  double chosen_accel = 0.0;        // realized first-step acceleration
  double chosen_end_speed = 0.0;    // profile speed at the horizon
  double min_candidate_cost = 0.0;
  double max_candidate_cost = 0.0;
  std::vector<PairDistance> pair_distances;  // all unordered pairs
};

struct SimTrace {
  std::string scenario_name;
  std::string ego_id;
  Mode mode = Mode::kRiskShadowing;
  std::vector<StepRecord> steps;
};

/// Advances one agent by a constant acceleration over dt. Velocity clamps at
/// standstill (with the exact sub-step stop, so no reverse motion) and agents
/// halt at the path end. Returns the realized acceleration (v1 - v0) / dt.
double advance_agent(AgentState& agent, double accel, double dt);

/// Fixed-step closed loop: scripted agents follow their schedules open-loop;
/// the ego follows the filter+planner (or planner-only) pipeline with only
/// the first step of each chosen profile executed. Deterministic: identical
/// scenarios produce identical traces. A planner failure aborts with a
/// std::runtime_error naming the step index.
SimTrace run_scenario(const Scenario& scenario);
SimTrace run_scenario(const Scenario& scenario, Mode mode_override);

}  // namespace riskshadow
