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

#include <cstdint>
#include <vector>

#include "riskshadow/agent.hpp"
#include "riskshadow/filter.hpp"

namespace riskshadow {

/// Deterministic random scene for the pairwise-sweep benchmark: n agents on
/// straight paths through a shared neighborhood with mixed speeds.
std::vector<AgentState> synthesize_scene(int n, std::uint64_t seed);

struct FilterBenchResult {
  int agents = 0;
  int directed_pairs = 0;      // reported by the filter run: n * (n - 1)
  double best_seconds = 0.0;   // fastest of `repeats` wall-clock timings
};

FilterBenchResult bench_run_filter(int n, std::uint64_t seed, int repeats = 3);

}  // namespace riskshadow
