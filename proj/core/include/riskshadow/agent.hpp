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

#include <memory>
#include <string>

#include "riskshadow/geometry.hpp"

namespace riskshadow {

/// One traffic participant: its driving path, longitudinal state on that
/// path, and rectangular body. Immutable by convention; the simulator makes
/// stepped copies.
struct AgentState {
  std::string id;
  std::shared_ptr<const Path> path;
  double arclength = 0.0;  // current position on the path, m
  double speed = 0.0;      // along-path speed, m/s, >= 0
  Footprint footprint;

  Pose2D pose() const { return path->position_at(arclength); }
};

/// Throws std::invalid_argument when the state violates its invariants
/// (missing path, arclength off the path, negative or non-finite speed,
/// degenerate footprint).
void validate(const AgentState& agent);

}  // namespace riskshadow
