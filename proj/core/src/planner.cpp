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

#include "riskshadow/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "riskshadow/encounter.hpp"

namespace riskshadow {

void validate(const PlannerConfig& cfg) {
  if (!(cfg.horizon > 0.0) || !(cfg.dt > 0.0) || cfg.dt > cfg.horizon) {
    throw std::invalid_argument("planner horizon/dt must be positive with dt <= horizon");
  }
  if (cfg.accel_grid.empty()) {
    throw std::invalid_argument("planner acceleration grid is empty");
  }
  if (std::find(cfg.accel_grid.begin(), cfg.accel_grid.end(), 0.0) ==
      cfg.accel_grid.end()) {
    throw std::invalid_argument("planner acceleration grid must contain 0");
  }
  if (cfg.switch_times.empty()) {
    throw std::invalid_argument("planner switch time list is empty");
  }
  if (!(cfg.risk_scale_d0 > 0.0)) {
    throw std::invalid_argument("risk_scale_d0 must be positive");
  }
}

std::vector<VelocityProfile> generate_profiles(const AgentState& ego,
                                               const PlannerConfig& cfg) {
  validate(cfg);
  const int steps = static_cast<int>(std::lround(cfg.horizon / cfg.dt));
  const double v_max =
      std::max(cfg.speed_headroom * ego.speed, cfg.min_speed_cap);

  std::vector<VelocityProfile> profiles;
  profiles.reserve(cfg.switch_times.size() * cfg.accel_grid.size() *
                   cfg.accel_grid.size());
  int id = 0;
  for (const double t_switch : cfg.switch_times) {
    for (const double a1 : cfg.accel_grid) {
      for (const double a2 : cfg.accel_grid) {
        VelocityProfile p;
        p.id = id++;
        p.dt = cfg.dt;
        p.accel_segments = {{t_switch, a1},
                            {std::max(0.0, cfg.horizon - t_switch), a2}};
        p.velocity.resize(steps + 1);
        p.arclength.resize(steps + 1);
        p.velocity[0] = ego.speed;
        p.arclength[0] = ego.arclength;
        for (int k = 0; k < steps; ++k) {
          const double t = k * cfg.dt;
          const double a = t < t_switch ? a1 : a2;
          const double v_next =
              std::clamp(p.velocity[k] + a * cfg.dt, 0.0, v_max);
          p.velocity[k + 1] = v_next;
          p.arclength[k + 1] =
              p.arclength[k] + 0.5 * (p.velocity[k] + v_next) * cfg.dt;
        }
        profiles.push_back(std::move(p));
      }
    }
  }
  return profiles;
}

double path_curvature(const Path& path, double arclength,
                      double smoothing_window) {
  const auto& cum = path.cumulative_arclength();
  const auto& wps = path.waypoints();
  const double half = 0.5 * smoothing_window;
  double turn = 0.0;
  for (std::size_t i = 1; i + 1 < wps.size(); ++i) {
    if (std::abs(cum[i] - arclength) > half) {
      continue;
    }
    const Vec2 in = wps[i] - wps[i - 1];
    const Vec2 out = wps[i + 1] - wps[i];
    turn +=
        std::abs(normalize_angle(std::atan2(out.y, out.x) - std::atan2(in.y, in.x)));
  }
  return turn / smoothing_window;
}

CostBreakdown score_profile(const VelocityProfile& profile,
                            const AgentState& ego,
                            std::span<const AgentState> others,
                            const PlannerConfig& cfg) {
  if (profile.velocity.size() < 2 ||
      profile.velocity.size() != profile.arclength.size()) {
    throw std::invalid_argument("profile is not sampled over the horizon");
  }
  const std::size_t steps = profile.velocity.size() - 1;
  const double dt = profile.dt;
  const double path_length = ego.path->length();

  // Proximity risk: per other agent, the worst predicted closeness.
  double risk = 0.0;
  for (const AgentState& other : others) {
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= steps; ++k) {
      const double s = k * dt;
      const Pose2D ego_pose =
          ego.path->position_at(std::min(profile.arclength[k], path_length));
      const double d = rectangle_distance(ego_pose, ego.footprint,
                                          predict_position(other, s),
                                          other.footprint);
      min_dist = std::min(min_dist, d);
    }
    risk += std::exp(-min_dist / cfg.risk_scale_d0);
  }

  if (cfg.curve_risk_enabled) {
    for (std::size_t k = 0; k < steps; ++k) {
      const double l = std::min(profile.arclength[k], path_length);
      const double kappa =
          path_curvature(*ego.path, l, cfg.curve_smoothing_window);
      const double lateral = profile.velocity[k] * profile.velocity[k] * kappa;
      risk += std::max(0.0, lateral - cfg.max_lateral_accel) * dt;
    }
  }
  risk *= cfg.risk_weight;

  const double utility =
      cfg.utility_weight *
      (std::min(profile.arclength[steps], path_length) - profile.arclength[0]);

  double comfort = 0.0;
  double prev_accel = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double accel = (profile.velocity[k + 1] - profile.velocity[k]) / dt;
    const double jerk = k == 0 ? 0.0 : (accel - prev_accel) / dt;
    comfort += (accel * accel + jerk * jerk) * dt;
    prev_accel = accel;
  }
  comfort *= cfg.comfort_weight;

  return CostBreakdown::make(risk, utility, comfort);
}

PlanResult plan_detailed(const AgentState& ego,
                         std::span<const AgentState> others,
                         const PlannerConfig& cfg) {
  validate(ego);
  const std::vector<VelocityProfile> profiles = generate_profiles(ego, cfg);

  PlanResult result;
  result.min_total = std::numeric_limits<double>::infinity();
  result.max_total = -std::numeric_limits<double>::infinity();
  const VelocityProfile* best = nullptr;
  CostBreakdown best_cost;
  for (const VelocityProfile& p : profiles) {
    const CostBreakdown cost = score_profile(p, ego, others, cfg);
    result.min_total = std::min(result.min_total, cost.total);
    result.max_total = std::max(result.max_total, cost.total);
    const auto key = std::make_tuple(cost.total, cost.risk,
                                     std::abs(p.initial_accel()), p.id);
    if (best == nullptr ||
        key < std::make_tuple(best_cost.total, best_cost.risk,
                              std::abs(best->initial_accel()), best->id)) {
      best = &p;
      best_cost = cost;
    }
  }
  result.profile = *best;
  result.cost = best_cost;
  return result;
}

VelocityProfile plan(const AgentState& ego, std::span<const AgentState> others,
                     const PlannerConfig& cfg) {
  return plan_detailed(ego, others, cfg).profile;
}

}  // namespace riskshadow
