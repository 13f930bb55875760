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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "riskshadow/catalog.hpp"
#include "test_support.hpp"

namespace riskshadow {
namespace {

using testing::Rng;
using testing::straight_path;

AgentState ego_at(double speed, double path_length = 400.0) {
  return {"ego", straight_path({0, 0}, {path_length, 0}), 0.0, speed,
          {4.5, 2.0}};
}

const VelocityProfile* find_constant(const std::vector<VelocityProfile>& ps) {
  for (const VelocityProfile& p : ps) {
    if (p.accel_segments[0].accel == 0.0 && p.accel_segments[1].accel == 0.0) {
      return &p;
    }
  }
  return nullptr;
}

TEST(GenerateProfilesTest, CartesianCountIncludesConstant) {
  PlannerConfig cfg;
  cfg.accel_grid = {-3.0, 0.0, 2.0};
  cfg.switch_times = {3.0};
  const auto profiles = generate_profiles(ego_at(8.0), cfg);
  EXPECT_EQ(profiles.size(), 9u);
  EXPECT_NE(find_constant(profiles), nullptr);
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    EXPECT_EQ(profiles[i].id, static_cast<int>(i));
  }
}

TEST(GenerateProfilesTest, StandstillClampsAtZero) {
  PlannerConfig cfg;
  cfg.accel_grid = {-3.0, 0.0};
  cfg.switch_times = {5.0};
  const auto profiles = generate_profiles(ego_at(0.0), cfg);
  for (const VelocityProfile& p : profiles) {
    if (p.accel_segments[0].accel < 0.0 && p.accel_segments[1].accel < 0.0) {
      for (const double v : p.velocity) {
        EXPECT_DOUBLE_EQ(v, 0.0);
      }
    }
  }
}

TEST(GenerateProfilesTest, TriangleProfileMatchesClosedFormKinematics) {
  PlannerConfig cfg;
  cfg.accel_grid = {-2.0, 0.0, 2.0};
  cfg.switch_times = {3.0};
  const AgentState ego = ego_at(2.0);
  const auto profiles = generate_profiles(ego, cfg);

  const VelocityProfile* triangle = nullptr;
  for (const VelocityProfile& p : profiles) {
    if (p.accel_segments[0].accel == 2.0 && p.accel_segments[1].accel == -2.0) {
      triangle = &p;
    }
  }
  ASSERT_NE(triangle, nullptr);

  for (std::size_t k = 0; k < triangle->velocity.size(); ++k) {
    const double t = k * cfg.dt;
    double v_expected;
    double l_expected;
    if (t <= 3.0) {
      v_expected = 2.0 + 2.0 * t;
      l_expected = 2.0 * t + t * t;
    } else if (t <= 7.0) {  // decelerating until standstill at t = 7
      const double u = t - 3.0;
      v_expected = 8.0 - 2.0 * u;
      l_expected = 15.0 + 8.0 * u - u * u;
    } else {
      v_expected = 0.0;
      l_expected = 31.0;
    }
    EXPECT_NEAR(triangle->velocity[k], v_expected, 1e-9) << "t=" << t;
    EXPECT_NEAR(triangle->arclength[k], l_expected, 1e-9) << "t=" << t;
  }
}

TEST(GenerateProfilesTest, SpeedCapAndFloor) {
  PlannerConfig cfg;
  cfg.accel_grid = {0.0, 2.0};
  cfg.switch_times = {5.0};
  // Slow ego: cap is the 10 m/s floor, not 1.5x speed.
  const auto slow = generate_profiles(ego_at(2.0), cfg);
  double max_v = 0.0;
  for (const VelocityProfile& p : slow) {
    max_v = std::max(max_v, *std::max_element(p.velocity.begin(),
                                              p.velocity.end()));
  }
  EXPECT_DOUBLE_EQ(max_v, 10.0);

  const auto fast = generate_profiles(ego_at(12.0), cfg);
  max_v = 0.0;
  for (const VelocityProfile& p : fast) {
    max_v = std::max(max_v, *std::max_element(p.velocity.begin(),
                                              p.velocity.end()));
  }
  EXPECT_DOUBLE_EQ(max_v, 18.0);
}

TEST(GenerateProfilesTest, ConfigValidation) {
  PlannerConfig cfg;
  cfg.accel_grid = {};
  EXPECT_THROW(generate_profiles(ego_at(5.0), cfg), std::invalid_argument);
  cfg.accel_grid = {1.0, -1.0};  // no zero
  EXPECT_THROW(generate_profiles(ego_at(5.0), cfg), std::invalid_argument);
  cfg.accel_grid = {0.0};
  cfg.switch_times.clear();
  EXPECT_THROW(generate_profiles(ego_at(5.0), cfg), std::invalid_argument);
}

TEST(ScoreProfileTest, EmptySceneHasOnlyUtility) {
  PlannerConfig cfg;
  const AgentState ego = ego_at(8.0);
  const auto profiles = generate_profiles(ego, cfg);
  const VelocityProfile* constant = find_constant(profiles);
  ASSERT_NE(constant, nullptr);
  const CostBreakdown cost = score_profile(*constant, ego, {}, cfg);
  EXPECT_DOUBLE_EQ(cost.risk, 0.0);
  EXPECT_DOUBLE_EQ(cost.comfort, 0.0);
  EXPECT_NEAR(cost.utility, cfg.utility_weight * 8.0 * cfg.horizon, 1e-9);
  EXPECT_DOUBLE_EQ(cost.total, cost.risk - cost.utility + cost.comfort);
}

TEST(ScoreProfileTest, HeadOnCourseCarriesRiskFloor) {
  PlannerConfig cfg;
  const AgentState ego = ego_at(8.0);
  // Oncoming on the same line: contact is predicted within the horizon.
  const AgentState oncoming{"oth", straight_path({60, 0}, {-60, 0}), 0.0, 8.0,
                            {4.5, 2.0}};
  const auto profiles = generate_profiles(ego, cfg);
  const VelocityProfile* constant = find_constant(profiles);
  const CostBreakdown cost =
      score_profile(*constant, ego, {&oncoming, 1}, cfg);
  const double floor =
      cfg.risk_weight * std::exp(-1.0 / cfg.risk_scale_d0);  // d_thr = 1 m
  EXPECT_GE(cost.risk, floor);
}

TEST(ScoreProfileTest, HarderBrakingCostsMoreComfort) {
  PlannerConfig cfg;
  const AgentState ego = ego_at(10.0);
  const auto make_brake = [&](double decel) {
    PlannerConfig one;
    one.accel_grid = {decel, 0.0};
    one.switch_times = {2.0};
    const auto profiles = generate_profiles(ego, one);
    for (const VelocityProfile& p : profiles) {
      if (p.accel_segments[0].accel == decel &&
          p.accel_segments[1].accel == 0.0) {
        return p;
      }
    }
    throw std::runtime_error("profile not found");
  };
  const CostBreakdown soft =
      score_profile(make_brake(-2.0), ego, {}, cfg);
  const CostBreakdown hard =
      score_profile(make_brake(-3.0), ego, {}, cfg);
  EXPECT_GT(hard.comfort, soft.comfort);
}

TEST(PlanTest, EmptySceneSelectsConstantProfileByEnumeration) {
  const PlannerConfig cfg;  // calibrated defaults
  for (const double v0 : {5.0, 8.0, 11.0, 15.0}) {
    const AgentState ego = ego_at(v0);
    const PlanResult result = plan_detailed(ego, {}, cfg);

    // Independent argmin over the same candidate set.
    const auto profiles = generate_profiles(ego, cfg);
    double best_total = 1e18;
    for (const VelocityProfile& p : profiles) {
      best_total =
          std::min(best_total, score_profile(p, ego, {}, cfg).total);
    }
    EXPECT_DOUBLE_EQ(result.cost.total, best_total) << "v0=" << v0;
    EXPECT_DOUBLE_EQ(result.profile.accel_segments[0].accel, 0.0)
        << "v0=" << v0;
    EXPECT_DOUBLE_EQ(result.profile.accel_segments[1].accel, 0.0)
        << "v0=" << v0;
    EXPECT_DOUBLE_EQ(result.cost.comfort, 0.0) << "v0=" << v0;
  }
}

TEST(PlanTest, UnfilteredCrossingCarForcesManeuver) {
  const CatalogEntry* entry = find_scenario("intro_truck_shadow");
  ASSERT_NE(entry, nullptr);
  const AgentState& ego = entry->scenario.agents[0].initial;
  std::vector<AgentState> all_others;
  for (std::size_t i = 1; i < entry->scenario.agents.size(); ++i) {
    all_others.push_back(entry->scenario.agents[i].initial);
  }
  const PlannerConfig& cfg = entry->scenario.planner_cfg;
  const VelocityProfile with_car = plan(ego, all_others, cfg);
  EXPECT_NE(with_car.accel_segments[0].accel, 0.0);

  // With the car filtered away only the harmless truck remains.
  std::vector<AgentState> truck_only;
  for (const AgentState& other : all_others) {
    if (other.id == "truck") {
      truck_only.push_back(other);
    }
  }
  const VelocityProfile without_car = plan(ego, truck_only, cfg);
  EXPECT_DOUBLE_EQ(without_car.accel_segments[0].accel, 0.0);
  EXPECT_DOUBLE_EQ(without_car.accel_segments[1].accel, 0.0);
}

TEST(PlanPropertyTest, ChosenProfileIsAlwaysAMember) {
  Rng rng(1313);
  PlannerConfig cfg;
  cfg.accel_grid = {-2.0, 0.0, 1.0};
  cfg.switch_times = {2.0, 5.0};
  for (int i = 0; i < 200; ++i) {
    const AgentState ego = testing::random_agent(rng, "ego");
    std::vector<AgentState> others{testing::random_agent(rng, "o1"),
                                   testing::random_agent(rng, "o2")};
    const PlanResult result = plan_detailed(ego, others, cfg);
    const auto profiles = generate_profiles(ego, cfg);
    ASSERT_LT(static_cast<std::size_t>(result.profile.id), profiles.size());
    const VelocityProfile& member = profiles[result.profile.id];
    EXPECT_EQ(member.accel_segments[0].accel,
              result.profile.accel_segments[0].accel);
    const CostBreakdown recomputed =
        score_profile(member, ego, others, cfg);
    EXPECT_DOUBLE_EQ(recomputed.total, result.cost.total);
    EXPECT_GE(result.cost.total, result.min_total);
    EXPECT_LE(result.cost.total, result.max_total);
  }
}

TEST(PlanPropertyTest, ArgminInvariantUnderUniformWeightScaling) {
  Rng rng(1414);
  PlannerConfig cfg;
  cfg.accel_grid = {-2.0, 0.0, 1.0};
  cfg.switch_times = {2.0, 5.0};
  for (int i = 0; i < 200; ++i) {
    const AgentState ego = testing::random_agent(rng, "ego");
    std::vector<AgentState> others{testing::random_agent(rng, "o1")};
    const int base_choice = plan_detailed(ego, others, cfg).profile.id;
    for (const double scale : {0.37, 2.0, 7.3}) {
      PlannerConfig scaled = cfg;
      scaled.risk_weight *= scale;
      scaled.utility_weight *= scale;
      scaled.comfort_weight *= scale;
      EXPECT_EQ(plan_detailed(ego, others, scaled).profile.id, base_choice)
          << "scale " << scale;
    }
  }
}

TEST(PlanPropertyTest, RiskMonotoneInAddedAgents) {
  Rng rng(1515);
  const PlannerConfig cfg;
  for (int i = 0; i < 200; ++i) {
    const AgentState ego = testing::random_agent(rng, "ego");
    const AgentState a = testing::random_agent(rng, "a");
    const AgentState b = testing::random_agent(rng, "b");
    const auto profiles = generate_profiles(ego, cfg);
    const VelocityProfile& p = profiles[rng() % profiles.size()];
    const double one = score_profile(p, ego, {&a, 1}, cfg).risk;
    const std::vector<AgentState> two{a, b};
    const double both = score_profile(p, ego, two, cfg).risk;
    EXPECT_GE(both, one - 1e-12);
  }
}

TEST(PlanPropertyTest, ArclengthIsTrapezoidalIntegralOfSpeed) {
  Rng rng(1616);
  const PlannerConfig cfg;
  for (int i = 0; i < 50; ++i) {
    const AgentState ego = testing::random_agent(rng, "ego");
    for (const VelocityProfile& p : generate_profiles(ego, cfg)) {
      for (std::size_t k = 0; k + 1 < p.velocity.size(); ++k) {
        const double step =
            0.5 * (p.velocity[k] + p.velocity[k + 1]) * p.dt;
        EXPECT_NEAR(p.arclength[k + 1] - p.arclength[k], step, 1e-6);
        EXPECT_GE(p.velocity[k], 0.0);
        EXPECT_LE(p.arclength[k], p.arclength[k + 1]);
      }
    }
  }
}

TEST(CurvatureTest, StraightPathIsFlat) {
  const Path path({{0, 0}, {100, 0}});
  EXPECT_DOUBLE_EQ(path_curvature(path, 50.0), 0.0);
}

TEST(CurvatureTest, RightAngleCornerAveragedOverWindow) {
  const Path path({{0, 0}, {10, 0}, {10, 10}});
  EXPECT_NEAR(path_curvature(path, 10.0, 5.0), (M_PI / 2.0) / 5.0, 1e-12);
  EXPECT_DOUBLE_EQ(path_curvature(path, 2.0, 5.0), 0.0);
}

TEST(CurvatureTest, CurveRiskPenalizesFastCornering) {
  const auto corner = std::make_shared<Path>(
      std::vector<Vec2>{{0, 0}, {40, 0}, {40, 40}});
  const AgentState ego{"ego", corner, 30.0, 12.0, {4.5, 2.0}};
  PlannerConfig cfg;
  cfg.accel_grid = {0.0};
  cfg.switch_times = {5.0};
  const auto profiles = generate_profiles(ego, cfg);
  const CostBreakdown off = score_profile(profiles[0], ego, {}, cfg);
  cfg.curve_risk_enabled = true;
  const CostBreakdown on = score_profile(profiles[0], ego, {}, cfg);
  EXPECT_DOUBLE_EQ(off.risk, 0.0);
  EXPECT_GT(on.risk, 0.0);
}

}  // namespace
}  // namespace riskshadow
