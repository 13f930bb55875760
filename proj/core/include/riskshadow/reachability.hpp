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
#include <span>
#include <string>
#include <vector>

#include "riskshadow/agent.hpp"
#include "riskshadow/encounter.hpp"
#include "riskshadow/geometry.hpp"

namespace riskshadow {

struct ReachParams {
  // Kinematic cap window when no collision point limits the agent: the
  // interval then ends at min(path length, l + speed * horizon + slack).
  double horizon = 10.0;          // s
  double no_conflict_slack = 5.0; // m
  // Extends the interval end to absorb prediction error; 0 reproduces the
  // unpadded behavior.
  double safety_margin = 0.0;     // m
  // When true (default) the widened polygon grows by half the vehicle length
  // at both interval ends; false keeps the literal interval sweep.
  bool extend_by_half_length = true;
};

/// Longitudinal reach of one agent on its own path: from its current position
/// to its nearest collision point (or the kinematic cap).
struct ReachInterval {
  std::string agent_id;
  double start = 0.0;  // m, the agent's current arc length
  double end = 0.0;    // m, start <= end <= path length
  // Agent whose collision point set `end`; empty when the cap applied.
  std::optional<std::string> limiting_agent;
};

/// The interval swept into a 2-D polygon with the agent's width (and,
/// optionally, half its length at both ends).
struct ReachArea {
  ReachInterval interval;
  std::vector<Vec2> polygon;  // counter-clockwise-ish ring, not closed
};

/// Eq.-style interval construction: end = min over the observer's collision
/// points, ties toward the smaller other_id; without collision points the
/// kinematic cap applies. Collision points must belong to this observer
/// (std::invalid_argument) and must not lie behind it (std::logic_error:
/// that would violate the encounter invariant).
ReachInterval reach_interval(const AgentState& agent,
                             std::span<const CollisionPoint> collision_points,
                             const ReachParams& params);

/// Sweeps the path slice [start, end] with the agent's width, mitering
/// corners, and extends both ends by half the vehicle length when configured.
ReachArea widen(const ReachInterval& interval, const AgentState& agent,
                const ReachParams& params);

/// True iff the polygons intersect or touch (shared boundary counts:
/// filtering stays conservative).
bool overlaps(const ReachArea& a, const ReachArea& b);

}  // namespace riskshadow
