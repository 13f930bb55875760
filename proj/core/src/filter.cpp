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

#include "riskshadow/filter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace riskshadow {

namespace {

constexpr double kPassedTceBound = 1e-9;
constexpr double kPassedWindow = 1.0;  // s of strictly opening distance

bool strictly_opening(const AgentState& ego, const AgentState& other,
                      const EncounterConfig& cfg) {
  const double dt = cfg.prediction_dt;
  double prev = rectangle_distance(predict_position(ego, 0.0), ego.footprint,
                                   predict_position(other, 0.0), other.footprint);
  for (double s = dt; s <= kPassedWindow + 1e-12; s += dt) {
    const double d =
        rectangle_distance(predict_position(ego, s), ego.footprint,
                           predict_position(other, s), other.footprint);
    if (!(d > prev)) {
      return false;
    }
    prev = d;
  }
  return true;
}

}  // namespace

std::string to_string(FilterReason reason) {
  switch (reason) {
    case FilterReason::kNoOverlap:
      return "no_overlap";
    case FilterReason::kOverlap:
      return "overlap";
    case FilterReason::kAlreadyPassed:
      return "already_passed";
  }
  return "unknown";
}

FilterReport run_filter(const AgentState& ego,
                        std::span<const AgentState> others,
                        const FilterConfig& cfg, double timestamp) {
  validate(cfg.encounter);
  validate(ego);
  std::set<std::string> ids{ego.id};
  for (const AgentState& other : others) {
    validate(other);
    if (!ids.insert(other.id).second) {
      throw std::invalid_argument("duplicate agent id '" + other.id + "'");
    }
  }

  std::vector<const AgentState*> agents;
  agents.push_back(&ego);
  for (const AgentState& other : others) {
    agents.push_back(&other);
  }
  const std::size_t n = agents.size();

  // Step 1: collision points from every agent's perspective (directed pairs).
  FilterReport report;
  report.timestamp = timestamp;
  std::vector<std::vector<CollisionPoint>> observed(n);
  std::map<std::string, EncounterResult> ego_encounters;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      const EncounterResult enc =
          closest_encounter(*agents[i], *agents[j], cfg.encounter);
      ++report.encounter_count;
      if (i == 0) {
        ego_encounters.emplace(agents[j]->id, enc);
      }
      if (enc.dce < cfg.encounter.distance_threshold) {
        CollisionPoint cp;
        cp.observer_id = agents[i]->id;
        cp.other_id = agents[j]->id;
        cp.position = enc.pce;
        cp.arclength = enc.pce_arclength;
        cp.tce = enc.tce;
        observed[i].push_back(std::move(cp));
      }
    }
  }

  // Step 2: one reachability area per agent.
  std::vector<ReachArea> areas(n);
  for (std::size_t i = 0; i < n; ++i) {
    areas[i] =
        widen(reach_interval(*agents[i], observed[i], cfg.reach), *agents[i],
              cfg.reach);
  }

  // Step 3: overlap check ego vs. each other agent.
  std::vector<std::size_t> order(n - 1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    order[k] = k + 1;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return agents[a]->id < agents[b]->id;
  });

  for (const std::size_t j : order) {
    FilterDecision decision;
    decision.other_id = agents[j]->id;
    decision.ego_area = areas[0];
    decision.other_area = areas[j];
    const EncounterResult& enc = ego_encounters.at(agents[j]->id);
    if (enc.tce <= kPassedTceBound &&
        strictly_opening(ego, *agents[j], cfg.encounter)) {
      decision.reason = FilterReason::kAlreadyPassed;
      decision.filtered = false;
    } else if (overlaps(areas[0], areas[j])) {
      decision.reason = FilterReason::kOverlap;
      decision.filtered = false;
    } else {
      decision.reason = FilterReason::kNoOverlap;
      decision.filtered = true;
    }
    report.decisions.push_back(std::move(decision));
  }
  return report;
}

}  // namespace riskshadow
