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

#include "riskshadow/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace riskshadow {

namespace {

using nlohmann::json;

json encounter_to_json(const EncounterConfig& cfg) {
  return {{"distance_threshold", cfg.distance_threshold},
          {"horizon", cfg.horizon},
          {"prediction_dt", cfg.prediction_dt}};
}

EncounterConfig encounter_from_json(const json& j) {
  EncounterConfig cfg;
  cfg.distance_threshold = j.at("distance_threshold").get<double>();
  cfg.horizon = j.at("horizon").get<double>();
  cfg.prediction_dt = j.at("prediction_dt").get<double>();
  return cfg;
}

json reach_to_json(const ReachParams& p) {
  return {{"horizon", p.horizon},
          {"no_conflict_slack", p.no_conflict_slack},
          {"safety_margin", p.safety_margin},
          {"extend_by_half_length", p.extend_by_half_length}};
}

ReachParams reach_from_json(const json& j) {
  ReachParams p;
  p.horizon = j.at("horizon").get<double>();
  p.no_conflict_slack = j.at("no_conflict_slack").get<double>();
  p.safety_margin = j.at("safety_margin").get<double>();
  p.extend_by_half_length = j.at("extend_by_half_length").get<bool>();
  return p;
}

json planner_to_json(const PlannerConfig& cfg) {
  return {{"horizon", cfg.horizon},
          {"dt", cfg.dt},
          {"accel_grid", cfg.accel_grid},
          {"switch_times", cfg.switch_times},
          {"risk_weight", cfg.risk_weight},
          {"utility_weight", cfg.utility_weight},
          {"comfort_weight", cfg.comfort_weight},
          {"risk_scale_d0", cfg.risk_scale_d0},
          {"curve_risk_enabled", cfg.curve_risk_enabled},
          {"max_lateral_accel", cfg.max_lateral_accel},
          {"curve_smoothing_window", cfg.curve_smoothing_window},
          {"speed_headroom", cfg.speed_headroom},
          {"min_speed_cap", cfg.min_speed_cap}};
}

PlannerConfig planner_from_json(const json& j) {
  PlannerConfig cfg;
  cfg.horizon = j.at("horizon").get<double>();
  cfg.dt = j.at("dt").get<double>();
  cfg.accel_grid = j.at("accel_grid").get<std::vector<double>>();
  cfg.switch_times = j.at("switch_times").get<std::vector<double>>();
  cfg.risk_weight = j.at("risk_weight").get<double>();
  cfg.utility_weight = j.at("utility_weight").get<double>();
  cfg.comfort_weight = j.at("comfort_weight").get<double>();
  cfg.risk_scale_d0 = j.at("risk_scale_d0").get<double>();
  cfg.curve_risk_enabled = j.at("curve_risk_enabled").get<bool>();
  cfg.max_lateral_accel = j.at("max_lateral_accel").get<double>();
  cfg.curve_smoothing_window = j.at("curve_smoothing_window").get<double>();
  cfg.speed_headroom = j.at("speed_headroom").get<double>();
  cfg.min_speed_cap = j.at("min_speed_cap").get<double>();
  return cfg;
}

json agent_to_json(const ScriptedAgent& agent) {
  json waypoints = json::array();
  for (const Vec2& wp : agent.initial.path->waypoints()) {
    waypoints.push_back({wp.x, wp.y});
  }
  json schedule = json::array();
  for (const ScheduleEntry& entry : agent.schedule) {
    schedule.push_back({entry.t_start, entry.accel});
  }
  return {{"id", agent.initial.id},
          {"waypoints", waypoints},
          {"arclength", agent.initial.arclength},
          {"speed", agent.initial.speed},
          {"footprint",
           {{"length", agent.initial.footprint.length},
            {"width", agent.initial.footprint.width}}},
          {"schedule", schedule}};
}

ScriptedAgent agent_from_json(const json& j) {
  ScriptedAgent agent;
  agent.initial.id = j.at("id").get<std::string>();
  std::vector<Vec2> waypoints;
  for (const json& wp : j.at("waypoints")) {
    if (!wp.is_array() || wp.size() != 2) {
      throw std::runtime_error("waypoint of agent '" + agent.initial.id +
                               "' is not an [x, y] pair");
    }
    waypoints.push_back({wp[0].get<double>(), wp[1].get<double>()});
  }
  agent.initial.path = std::make_shared<Path>(std::move(waypoints));
  agent.initial.arclength = j.at("arclength").get<double>();
  agent.initial.speed = j.at("speed").get<double>();
  agent.initial.footprint.length =
      j.at("footprint").at("length").get<double>();
  agent.initial.footprint.width = j.at("footprint").at("width").get<double>();
  for (const json& entry : j.at("schedule")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::runtime_error("schedule entry of agent '" +
                               agent.initial.id +
                               "' is not a [t_start, accel] pair");
    }
    agent.schedule.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  return agent;
}

json scenario_to_json_value(const Scenario& scenario) {
  json agents = json::array();
  for (const ScriptedAgent& agent : scenario.agents) {
    agents.push_back(agent_to_json(agent));
  }
  return {{"name", scenario.name},
          {"ego_id", scenario.ego_id},
          {"duration", scenario.duration},
          {"sim_dt", scenario.sim_dt},
          {"mode", to_string(scenario.mode)},
          {"encounter", encounter_to_json(scenario.filter_cfg.encounter)},
          {"reachability", reach_to_json(scenario.filter_cfg.reach)},
          {"planner", planner_to_json(scenario.planner_cfg)},
          {"agents", agents}};
}

}  // namespace

std::string scenario_to_json(const Scenario& scenario) {
  return scenario_to_json_value(scenario).dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("scenario is not valid JSON: ") +
                             e.what());
  }
  try {
    Scenario scenario;
    scenario.name = j.at("name").get<std::string>();
    scenario.ego_id = j.at("ego_id").get<std::string>();
    scenario.duration = j.at("duration").get<double>();
    scenario.sim_dt = j.at("sim_dt").get<double>();
    const std::string mode_name = j.at("mode").get<std::string>();
    const std::optional<Mode> mode = mode_from_string(mode_name);
    if (!mode) {
      throw std::runtime_error("unknown mode '" + mode_name + "'");
    }
    scenario.mode = *mode;
    scenario.filter_cfg.encounter = encounter_from_json(j.at("encounter"));
    scenario.filter_cfg.reach = reach_from_json(j.at("reachability"));
    scenario.planner_cfg = planner_from_json(j.at("planner"));
    for (const json& agent : j.at("agents")) {
      scenario.agents.push_back(agent_from_json(agent));
    }
    return scenario;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("scenario JSON is malformed: ") +
                             e.what());
  }
}

void save_scenario(const Scenario& scenario,
                   const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) {
    throw std::runtime_error("cannot open '" + file.string() +
                             "' for writing");
  }
  out << scenario_to_json(scenario);
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open scenario file '" + file.string() +
                             "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str());
}

std::vector<Scenario> load_scenario_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Scenario> scenarios;
  scenarios.reserve(files.size());
  for (const auto& file : files) {
    scenarios.push_back(load_scenario(file));
  }
  return scenarios;
}

bool scenario_equal(const Scenario& a, const Scenario& b) {
  return scenario_to_json_value(a) == scenario_to_json_value(b);
}

}  // namespace riskshadow
