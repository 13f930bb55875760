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

#include "riskshadow/trace_csv.hpp"

#include <cstdio>
#include <sstream>

namespace riskshadow {

std::string csv_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

std::string trace_csv_header() {
  return "time,agent_id,arclength,speed,accel,x,y,heading,dist_to_ego,"
         "chosen_profile,chosen_accel,chosen_end_speed,cost_min,cost_max";
}

std::string filter_csv_header() {
  return "time,other_id,filtered,reason,ego_ra_start,ego_ra_end,"
         "other_ra_start,other_ra_end,limiting_agent";
}

std::string trace_to_csv(const SimTrace& trace) {
  std::ostringstream out;
  out << trace_csv_header() << "\n";
  for (const StepRecord& step : trace.steps) {
    for (const AgentRecord& agent : step.agents) {
      const bool is_ego = agent.id == trace.ego_id;
      out << csv_number(step.time) << ',' << agent.id << ','
          << csv_number(agent.arclength) << ',' << csv_number(agent.speed)
          << ',' << csv_number(agent.accel) << ','
          << csv_number(agent.pose.position.x) << ','
          << csv_number(agent.pose.position.y) << ','
          << csv_number(agent.pose.heading) << ',';
      if (!is_ego) {
        for (const PairDistance& pair : step.pair_distances) {
          if ((pair.first_id == trace.ego_id && pair.second_id == agent.id) ||
              (pair.second_id == trace.ego_id && pair.first_id == agent.id)) {
            out << csv_number(pair.distance);
            break;
          }
        }
        out << ",,,,,\n";
      } else {
        out << ',' << step.chosen_profile_id << ','
            << csv_number(step.chosen_accel) << ','
            << csv_number(step.chosen_end_speed) << ','
            << csv_number(step.min_candidate_cost) << ','
            << csv_number(step.max_candidate_cost) << "\n";
      }
    }
  }
  return out.str();
}

std::string filter_reports_to_csv(const SimTrace& trace) {
  std::ostringstream out;
  out << filter_csv_header() << "\n";
  for (const StepRecord& step : trace.steps) {
    if (!step.filter) {
      continue;
    }
    for (const FilterDecision& decision : step.filter->decisions) {
      out << csv_number(step.filter->timestamp) << ',' << decision.other_id
          << ',' << (decision.filtered ? "true" : "false") << ','
          << to_string(decision.reason) << ','
          << csv_number(decision.ego_area.interval.start) << ','
          << csv_number(decision.ego_area.interval.end) << ','
          << csv_number(decision.other_area.interval.start) << ','
          << csv_number(decision.other_area.interval.end) << ','
          << decision.other_area.interval.limiting_agent.value_or("") << "\n";
    }
  }
  return out.str();
}

}  // namespace riskshadow
