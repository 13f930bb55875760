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

#include <benchmark/benchmark.h>

#include "riskshadow/bench.hpp"
#include "riskshadow/catalog.hpp"
#include "riskshadow/encounter.hpp"
#include "riskshadow/planner.hpp"

namespace riskshadow {
namespace {

void BM_RunFilter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<AgentState> agents = synthesize_scene(n, 42);
  const std::vector<AgentState> others(agents.begin() + 1, agents.end());
  const FilterConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_filter(agents.front(), others, cfg));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_RunFilter)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_ClosestEncounter(benchmark::State& state) {
  const std::vector<AgentState> agents = synthesize_scene(2, 7);
  const EncounterConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closest_encounter(agents[0], agents[1], cfg));
  }
}
BENCHMARK(BM_ClosestEncounter);

void BM_RectangleDistance(benchmark::State& state) {
  const Pose2D a{{0.0, 0.0}, 0.3};
  const Pose2D b{{7.0, 3.0}, -1.1};
  const Footprint fa{4.5, 2.0};
  const Footprint fb{8.0, 2.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rectangle_distance(a, fa, b, fb));
  }
}
BENCHMARK(BM_RectangleDistance);

void BM_Plan(benchmark::State& state) {
  const CatalogEntry* intro = find_scenario("intro_truck_shadow");
  const AgentState& ego = intro->scenario.agents[0].initial;
  std::vector<AgentState> others;
  for (std::size_t i = 1; i < intro->scenario.agents.size(); ++i) {
    others.push_back(intro->scenario.agents[i].initial);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan(ego, others, intro->scenario.planner_cfg));
  }
}
BENCHMARK(BM_Plan);

}  // namespace
}  // namespace riskshadow

BENCHMARK_MAIN();
