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

#include "riskshadow/agent.hpp"
#include "riskshadow/geometry.hpp"

namespace riskshadow {

struct EncounterConfig {
  // Shape-to-shape distance below which a predicted encounter becomes a
  // collision point. Zero disables collision points entirely (the comparison
  // is strict).
  double distance_threshold = 1.0;  // m
  double horizon = 10.0;            // s
  double prediction_dt = 0.1;       // s, coarse sampling step
};

/// Throws std::invalid_argument on non-positive horizon/step, a step larger
/// than the horizon, or a negative threshold.
void validate(const EncounterConfig& cfg);

/// Closest predicted approach between two agents under constant-velocity
/// motion along their paths. `pce` is the FIRST agent's pose at `tce`.
struct EncounterResult {
  double dce = 0.0;      // m, minimum shape-to-shape distance
  double tce = 0.0;      // s, time of that minimum
  Pose2D pce;            // first agent's pose at tce
  double pce_arclength = 0.0;  // first agent's arc length at tce
};

/// A thresholded encounter: the observer cannot drive past `arclength` on its
/// own path without conflicting with `other_id`.
struct CollisionPoint {
  std::string observer_id;
  std::string other_id;
  Pose2D position;        // observer pose at tce
  double arclength = 0.0; // on the observer's path
  double tce = 0.0;
};

/// Constant-velocity prediction along the agent's path; agents stop at the
/// path end rather than extrapolating off it.
Pose2D predict_position(const AgentState& agent, double s);

/// Arc length the agent occupies at future time s (clamped to the path end).
double predicted_arclength(const AgentState& agent, double s);

/// Samples the pairwise shape distance d(s) at s = 0, dt, ..., horizon and
/// refines the winning bracket by golden-section search to 1e-3 s. Ties in
/// d (within 1e-9) resolve toward smaller s.
EncounterResult closest_encounter(const AgentState& a, const AgentState& b,
                                  const EncounterConfig& cfg);

/// Promotes the encounter to a collision point iff dce < distance_threshold
/// (strict). The collision point carries the OBSERVER's pose and arc length.
std::optional<CollisionPoint> collision_point(const AgentState& observer,
                                              const AgentState& other,
                                              const EncounterConfig& cfg);

}  // namespace riskshadow
