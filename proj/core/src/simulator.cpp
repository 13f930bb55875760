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

#include "riskshadow/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace riskshadow {

namespace {

double scheduled_accel(const std::vector<ScheduleEntry>& schedule, double t) {
  double accel = 0.0;
  for (const ScheduleEntry& entry : schedule) {
    if (entry.t_start > t) {
      break;
    }
    accel = entry.accel;
  }
  return accel;
}

}  // namespace

std::string to_string(Mode mode) {
  return mode == Mode::kRiskShadowing ? "risk_shadowing" : "baseline";
}

std::optional<Mode> mode_from_string(const std::string& name) {
  if (name == "risk_shadowing") return Mode::kRiskShadowing;
  if (name == "baseline") return Mode::kBaseline;
  return std::nullopt;
}

void validate(const Scenario& scenario) {
  if (!(scenario.sim_dt > 0.0) || !(scenario.duration > 0.0)) {
    throw std::invalid_argument("scenario '" + scenario.name +
                                "' needs positive duration and sim_dt");
  }
  validate(scenario.filter_cfg.encounter);
  // The planner config is validated when profiles are generated, so a broken
  // one surfaces as a planner abort naming the step index.
  std::set<std::string> ids;
  bool ego_found = false;
  for (const ScriptedAgent& agent : scenario.agents) {
    validate(agent.initial);
    if (!ids.insert(agent.initial.id).second) {
      throw std::invalid_argument("scenario '" + scenario.name +
                                  "' has duplicate agent id '" +
                                  agent.initial.id + "'");
    }
    if (agent.initial.id == scenario.ego_id) {
      ego_found = true;
    }
    for (std::size_t i = 1; i < agent.schedule.size(); ++i) {
      if (agent.schedule[i].t_start < agent.schedule[i - 1].t_start) {
        throw std::invalid_argument("schedule of agent '" + agent.initial.id +
                                    "' is not sorted by t_start");
      }
    }
  }
  if (!ego_found) {
    throw std::invalid_argument("scenario '" + scenario.name +
                                "' is missing ego agent '" + scenario.ego_id +
                                "'");
  }
}

double advance_agent(AgentState& agent, double accel, double dt) {
  const double v0 = agent.speed;
  const double path_length = agent.path->length();
  double v1 = v0 + accel * dt;
  double dl;
  if (v1 < 0.0) {
    // Exact sub-step stop: travel only until the speed reaches zero.
    dl = accel < 0.0 ? v0 * v0 / (-2.0 * accel) : 0.0;
    v1 = 0.0;
  } else {
    dl = 0.5 * (v0 + v1) * dt;
  }
  double l = agent.arclength + dl;
  if (l >= path_length) {
    l = path_length;
    v1 = 0.0;  // agents stop at the path end
  }
  agent.arclength = l;
  agent.speed = v1;
  return (v1 - v0) / dt;
}

SimTrace run_scenario(const Scenario& scenario, Mode mode_override) {
  Scenario adjusted = scenario;
  adjusted.mode = mode_override;
  return run_scenario(adjusted);
}

SimTrace run_scenario(const Scenario& scenario) {
  validate(scenario);

  SimTrace trace;
  trace.scenario_name = scenario.name;
  trace.ego_id = scenario.ego_id;
  trace.mode = scenario.mode;

  std::vector<AgentState> states;
  std::vector<const std::vector<ScheduleEntry>*> schedules;
  std::size_t ego_index = 0;
  for (std::size_t i = 0; i < scenario.agents.size(); ++i) {
    states.push_back(scenario.agents[i].initial);
    schedules.push_back(&scenario.agents[i].schedule);
    if (states.back().id == scenario.ego_id) {
      ego_index = i;
    }
  }

  const int total_steps =
      static_cast<int>(std::lround(scenario.duration / scenario.sim_dt));
  trace.steps.reserve(total_steps);

  for (int k = 0; k < total_steps; ++k) {
    const double t = k * scenario.sim_dt;

    std::vector<AgentState> others;
    others.reserve(states.size() - 1);
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (i != ego_index) {
        others.push_back(states[i]);
      }
    }

    StepRecord record;
    record.time = t;

    std::vector<AgentState> planner_set;
    if (scenario.mode == Mode::kRiskShadowing) {
      FilterReport report =
          run_filter(states[ego_index], others, scenario.filter_cfg, t);
      for (const AgentState& other : others) {
        const auto it = std::find_if(
            report.decisions.begin(), report.decisions.end(),
            [&](const FilterDecision& d) { return d.other_id == other.id; });
        if (it == report.decisions.end() || !it->filtered) {
          planner_set.push_back(other);
        }
      }
      record.filter = std::move(report);
    } else {
      planner_set = others;
    }

    PlanResult planned;
    try {
      planned =
          plan_detailed(states[ego_index], planner_set, scenario.planner_cfg);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "planner aborted at step " << k << " (t=" << t
          << "): " << e.what();
      throw std::runtime_error(msg.str());
    }
    record.chosen_profile_id = planned.profile.id;
    record.chosen_end_speed = planned.profile.velocity.back();
    record.min_candidate_cost = planned.min_total;
    record.max_candidate_cost = planned.max_total;

    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = i + 1; j < states.size(); ++j) {
        record.pair_distances.push_back(
            {states[i].id, states[j].id,
             rectangle_distance(states[i].pose(), states[i].footprint,
                                states[j].pose(), states[j].footprint)});
      }
    }

    std::vector<AgentRecord> agent_records(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
      agent_records[i].id = states[i].id;
      agent_records[i].arclength = states[i].arclength;
      agent_records[i].speed = states[i].speed;
      agent_records[i].pose = states[i].pose();
    }

    for (std::size_t i = 0; i < states.size(); ++i) {
      const double accel = i == ego_index
                               ? planned.profile.first_step_accel()
                               : scheduled_accel(*schedules[i], t);
      agent_records[i].accel =
          advance_agent(states[i], accel, scenario.sim_dt);
      if (i == ego_index) {
        record.chosen_accel = agent_records[i].accel;
      }
    }

    record.agents = std::move(agent_records);
    trace.steps.push_back(std::move(record));
  }
  return trace;
}

}  // namespace riskshadow
