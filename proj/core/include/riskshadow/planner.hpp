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

#include <span>
#include <vector>

#include "riskshadow/agent.hpp"

namespace riskshadow {

struct PlannerConfig {
  double horizon = 10.0;  // s
  double dt = 0.1;        // s, profile sampling step
  // Candidate accelerations; must contain 0 so the constant-velocity profile
  // is always generated. The smallest non-zero magnitude sets how fine the
  // planner can modulate speed (and how cheap the cheapest non-constant
  // profile is, see the default-weight calibration in tools/calibrate).
  std::vector<double> accel_grid = {-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  std::vector<double> switch_times = {1.0, 2.0, 3.0, 5.0};

  // Cost weights (C = R - U + O). Defaults are the calibrated values from
  // tools/calibrate: with them the constant profile wins on an empty road and
  // the three-agent reference scenes reproduce their accelerate/brake phases.
  double risk_weight = 10.0;      // w_R
  double utility_weight = 0.001;  // w_U
  double comfort_weight = 0.02;   // w_O
  double risk_scale_d0 = 4.0;    // m, e-folding distance of proximity risk

  bool curve_risk_enabled = false;
  double max_lateral_accel = 3.0;  // m/s^2, tolerated v^2 * kappa
  double curve_smoothing_window = 5.0;  // m

  // Profiles clamp at v_max = max(speed_headroom * current speed, min_speed_cap).
  double speed_headroom = 1.5;
  double min_speed_cap = 10.0;  // m/s
};

/// Throws std::invalid_argument on an empty or 0-less acceleration grid,
/// empty switch times, or non-positive horizon/dt.
void validate(const PlannerConfig& cfg);

/// One candidate future behavior: accelerate at `first.accel` until the
/// switch time, then at `second.accel` until the horizon, with speed clamped
/// to [0, v_max]. Velocity and arc length are sampled at `dt`; arc length is
/// the exact trapezoidal integral of the sampled velocity.
struct VelocityProfile {
  struct Segment {
    double duration = 0.0;
    double accel = 0.0;
  };

  int id = 0;
  std::vector<Segment> accel_segments;
  std::vector<double> velocity;   // size steps + 1
  std::vector<double> arclength;  // size steps + 1
  double dt = 0.1;

  double initial_accel() const { return accel_segments.front().accel; }
  /// Acceleration actually realized over the first step (after clamping);
  /// this is what a receding-horizon executor applies.
  double first_step_accel() const { return (velocity[1] - velocity[0]) / dt; }
};

struct CostBreakdown {
  double risk = 0.0;
  double utility = 0.0;
  double comfort = 0.0;
  double total = 0.0;  // risk - utility + comfort, set by make()

  static CostBreakdown make(double risk, double utility, double comfort) {
    return {risk, utility, comfort, risk - utility + comfort};
  }
};

/// Cartesian product accel_grid x switch_times x accel_grid, one profile per
/// combination, ids in generation order.
std::vector<VelocityProfile> generate_profiles(const AgentState& ego,
                                               const PlannerConfig& cfg);

/// C = R - U + O for one profile against constant-velocity predictions of
/// `others`. Risk: per-agent peak exponential proximity (plus the lateral
/// over-acceleration term when curve risk is on). Utility: distance traveled
/// toward the path end. Comfort: accumulated squared acceleration and jerk.
CostBreakdown score_profile(const VelocityProfile& profile,
                            const AgentState& ego,
                            std::span<const AgentState> others,
                            const PlannerConfig& cfg);

struct PlanResult {
  VelocityProfile profile;
  CostBreakdown cost;
  double min_total = 0.0;  // over all candidates
  double max_total = 0.0;
};

/// Scores every generated profile and returns the argmin of total cost.
/// Ties resolve by lower risk, then lower |first accel|, then lower id.
PlanResult plan_detailed(const AgentState& ego,
                         std::span<const AgentState> others,
                         const PlannerConfig& cfg);

VelocityProfile plan(const AgentState& ego, std::span<const AgentState> others,
                     const PlannerConfig& cfg);

/// Unsigned path curvature at an arc length, averaged from polyline turn
/// angles over a smoothing window.
double path_curvature(const Path& path, double arclength,
                      double smoothing_window = 5.0);

}  // namespace riskshadow
