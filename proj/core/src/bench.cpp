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

#include "riskshadow/bench.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <random>
#include <string>

namespace riskshadow {

std::vector<AgentState> synthesize_scene(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(-60.0, 60.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_real_distribution<double> speed(0.0, 15.0);

  std::vector<AgentState> agents;
  agents.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Vec2 start{pos(rng), pos(rng)};
    const double heading = angle(rng);
    const Vec2 dir{std::cos(heading), std::sin(heading)};
    AgentState agent;
    agent.id = "a" + std::to_string(i);
    agent.path = std::make_shared<Path>(
        std::vector<Vec2>{start, start + dir * 250.0});
    agent.arclength = 0.0;
    agent.speed = speed(rng);
    agent.footprint = {4.5, 2.0};
    agents.push_back(std::move(agent));
  }
  return agents;
}

FilterBenchResult bench_run_filter(int n, std::uint64_t seed, int repeats) {
  const std::vector<AgentState> agents = synthesize_scene(n, seed);
  const std::vector<AgentState> others(agents.begin() + 1, agents.end());
  const FilterConfig cfg;

  FilterBenchResult result;
  result.agents = n;
  result.best_seconds = 1e18;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const FilterReport report = run_filter(agents.front(), others, cfg);
    const auto stop = std::chrono::steady_clock::now();
    result.directed_pairs = report.encounter_count;
    result.best_seconds = std::min(
        result.best_seconds,
        std::chrono::duration<double>(stop - start).count());
  }
  return result;
}

}  // namespace riskshadow
