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
#include <string>
#include <vector>

#include "riskshadow/agent.hpp"
#include "riskshadow/encounter.hpp"
#include "riskshadow/reachability.hpp"

namespace riskshadow {

enum class FilterReason {
  kNoOverlap,      // reachability areas disjoint -> agent filtered out
  kOverlap,        // reachability areas intersect -> agent kept
  kAlreadyPassed,  // closest encounter is now and the distance is opening
};

std::string to_string(FilterReason reason);

struct FilterDecision {
  std::string other_id;
  bool filtered = false;  // true iff reason == kNoOverlap
  ReachArea ego_area;
  ReachArea other_area;
  FilterReason reason = FilterReason::kOverlap;
};

struct FilterConfig {
  EncounterConfig encounter;
  ReachParams reach;
};

/// One risk-shadowing pass over a scene.
struct FilterReport {
  double timestamp = 0.0;
  std::vector<FilterDecision> decisions;  // sorted by other_id
  // Directed pairwise encounter evaluations performed: n * (n - 1).
  int encounter_count = 0;
};

/// Three-step sweep: collision points from every agent's perspective,
/// per-agent reachability areas, then the ego-vs-other overlap check.
/// Agents whose encounter with the ego happens at s = 0 with strictly
/// opening distance are tagged kAlreadyPassed and never filtered.
/// Throws std::invalid_argument on duplicate agent ids.
FilterReport run_filter(const AgentState& ego,
                        std::span<const AgentState> others,
                        const FilterConfig& cfg, double timestamp = 0.0);

}  // namespace riskshadow
