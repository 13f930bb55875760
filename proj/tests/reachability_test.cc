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

#include "riskshadow/reachability.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "test_support.hpp"

namespace riskshadow {
namespace {

using testing::Rng;
using testing::straight_path;

AgentState agent_on(std::shared_ptr<const Path> path, double l, double v,
                    Footprint fp = {4.0, 2.0}, const std::string& id = "a") {
  return {id, std::move(path), l, v, fp};
}

CollisionPoint cp(const std::string& observer, const std::string& other,
                  double arclength) {
  CollisionPoint point;
  point.observer_id = observer;
  point.other_id = other;
  point.arclength = arclength;
  return point;
}

TEST(ReachIntervalTest, KinematicCapWithoutCollisionPoints) {
  const AgentState a = agent_on(straight_path({0, 0}, {100, 0}), 0.0, 7.5);
  ReachParams params;  // horizon 10, slack 5 -> cap at 80
  const ReachInterval interval = reach_interval(a, {}, params);
  EXPECT_DOUBLE_EQ(interval.start, 0.0);
  EXPECT_DOUBLE_EQ(interval.end, 80.0);
  EXPECT_FALSE(interval.limiting_agent.has_value());
}

TEST(ReachIntervalTest, CapClampsToPathLength) {
  const AgentState a = agent_on(straight_path({0, 0}, {40, 0}), 0.0, 7.5);
  const ReachInterval interval = reach_interval(a, {}, ReachParams{});
  EXPECT_DOUBLE_EQ(interval.end, 40.0);
}

TEST(ReachIntervalTest, MinimumOverCollisionPoints) {
  const AgentState a = agent_on(straight_path({0, 0}, {100, 0}), 5.0, 10.0);
  const std::vector<CollisionPoint> points{cp("a", "x", 30.0),
                                           cp("a", "y", 15.0)};
  const ReachInterval interval = reach_interval(a, points, ReachParams{});
  EXPECT_DOUBLE_EQ(interval.start, 5.0);
  EXPECT_DOUBLE_EQ(interval.end, 15.0);
  EXPECT_EQ(interval.limiting_agent.value(), "y");

  // Exhaustive check over every subset ordering: the argmin decides.
  std::vector<CollisionPoint> shuffled{cp("a", "y", 15.0), cp("a", "x", 30.0)};
  EXPECT_DOUBLE_EQ(reach_interval(a, shuffled, ReachParams{}).end, 15.0);
}

TEST(ReachIntervalTest, TieBreaksTowardSmallerOtherId) {
  const AgentState a = agent_on(straight_path({0, 0}, {100, 0}), 0.0, 10.0);
  const std::vector<CollisionPoint> points{cp("a", "zed", 20.0),
                                           cp("a", "amy", 20.0)};
  const ReachInterval interval = reach_interval(a, points, ReachParams{});
  EXPECT_EQ(interval.limiting_agent.value(), "amy");
}

TEST(ReachIntervalTest, RejectsForeignAndBackwardPoints) {
  const AgentState a = agent_on(straight_path({0, 0}, {100, 0}), 50.0, 10.0);
  const std::vector<CollisionPoint> foreign{cp("b", "x", 60.0)};
  EXPECT_THROW(reach_interval(a, foreign, ReachParams{}),
               std::invalid_argument);
  const std::vector<CollisionPoint> behind{cp("a", "x", 40.0)};
  EXPECT_THROW(reach_interval(a, behind, ReachParams{}), std::logic_error);
}

TEST(ReachIntervalTest, SafetyMarginExtendsEnd) {
  const AgentState a = agent_on(straight_path({0, 0}, {100, 0}), 0.0, 5.0);
  const std::vector<CollisionPoint> points{cp("a", "x", 30.0)};
  ReachParams params;
  params.safety_margin = 4.0;
  EXPECT_DOUBLE_EQ(reach_interval(a, points, params).end, 34.0);
  params.safety_margin = 0.0;
  EXPECT_DOUBLE_EQ(reach_interval(a, points, params).end, 30.0);
}

TEST(WidenTest, StraightIntervalBecomesRectangle) {
  const AgentState a =
      agent_on(straight_path({0, 0}, {50, 0}), 0.0, 5.0, {4.0, 2.0});
  ReachInterval interval{"a", 0.0, 10.0, std::nullopt};
  const ReachArea area = widen(interval, a, ReachParams{});

  double min_x = 1e18, max_x = -1e18, min_y = 1e18, max_y = -1e18;
  for (const Vec2& p : area.polygon) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  EXPECT_NEAR(min_x, -2.0, 1e-9);
  EXPECT_NEAR(max_x, 12.0, 1e-9);
  EXPECT_NEAR(min_y, -1.0, 1e-9);
  EXPECT_NEAR(max_y, 1.0, 1e-9);
  EXPECT_NEAR(testing::polygon_area(area.polygon), 28.0, 1e-9);
}

TEST(WidenTest, LiteralIntervalWithoutLengthExtension) {
  const AgentState a =
      agent_on(straight_path({0, 0}, {50, 0}), 0.0, 5.0, {4.0, 2.0});
  ReachParams params;
  params.extend_by_half_length = false;
  const ReachArea area = widen({"a", 0.0, 10.0, std::nullopt}, a, params);
  double min_x = 1e18, max_x = -1e18;
  for (const Vec2& p : area.polygon) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
  }
  EXPECT_NEAR(min_x, 0.0, 1e-9);
  EXPECT_NEAR(max_x, 10.0, 1e-9);
}

TEST(WidenTest, ZeroLengthIntervalDegeneratesToFootprint) {
  const AgentState a =
      agent_on(straight_path({0, 0}, {50, 0}), 20.0, 5.0, {4.0, 2.0});
  const ReachArea area = widen({"a", 20.0, 20.0, std::nullopt}, a, ReachParams{});
  EXPECT_NEAR(testing::polygon_area(area.polygon), 4.0 * 2.0, 1e-9);
  double min_x = 1e18, max_x = -1e18;
  for (const Vec2& p : area.polygon) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
  }
  EXPECT_NEAR(min_x, 18.0, 1e-9);
  EXPECT_NEAR(max_x, 22.0, 1e-9);
}

TEST(WidenTest, CornerSliceAreaMatchesRasterOracle) {
  const auto path = std::make_shared<Path>(
      std::vector<Vec2>{{0, 0}, {10, 0}, {10, 10}});
  const AgentState a = agent_on(path, 0.0, 5.0, {4.0, 2.0});
  ReachParams params;
  params.extend_by_half_length = false;  // isolate the sweep itself
  const ReachArea area = widen({"a", 2.0, 16.0, std::nullopt}, a, params);

  const double interval_length = 14.0;
  const double swept = testing::polygon_area(area.polygon);
  EXPECT_GE(swept, 2.0 * interval_length * 0.99);

  const double rasterized = testing::rasterized_area(area.polygon, 0.01);
  EXPECT_NEAR(rasterized, swept, 0.01 * swept);
}

TEST(OverlapsTest, PerpendicularStripsThroughOrigin) {
  const AgentState a =
      agent_on(straight_path({-20, 0}, {20, 0}), 0.0, 5.0, {4.0, 2.0}, "a");
  const AgentState b =
      agent_on(straight_path({0, -20}, {0, 20}), 0.0, 5.0, {4.0, 2.0}, "b");
  const ReachArea ra = widen({"a", 0.0, 40.0, std::nullopt}, a, ReachParams{});
  const ReachArea rb = widen({"b", 0.0, 40.0, std::nullopt}, b, ReachParams{});
  EXPECT_TRUE(overlaps(ra, rb));
  EXPECT_TRUE(overlaps(rb, ra));
}

TEST(OverlapsTest, AreaEndingShortOfTheCrossingDoesNotOverlap) {
  // The other agent's reach ends 20 m before the crossing the ego covers.
  const AgentState ego =
      agent_on(straight_path({0, -40}, {0, 40}), 0.0, 8.0, {4.5, 2.0}, "ego");
  const AgentState other =
      agent_on(straight_path({-60, 0}, {60, 0}), 0.0, 8.0, {4.5, 2.0}, "oth");
  const ReachArea ego_area =
      widen({"ego", 0.0, 80.0, std::nullopt}, ego, ReachParams{});
  const ReachArea short_area =
      widen({"oth", 0.0, 35.0, std::nullopt}, other, ReachParams{});  // to x=-25
  EXPECT_FALSE(overlaps(ego_area, short_area));

  const ReachArea long_area =
      widen({"oth", 0.0, 80.0, std::nullopt}, other, ReachParams{});
  EXPECT_TRUE(overlaps(ego_area, long_area));
}

TEST(OverlapsPropertyTest, Symmetry) {
  Rng rng(404);
  const ReachParams params;
  int overlapping = 0;
  for (int i = 0; i < 250; ++i) {
    const AgentState a = testing::random_agent(rng, "a");
    const AgentState b = testing::random_agent(rng, "b");
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    const double ea =
        a.arclength + frac(rng) * (a.path->length() - a.arclength);
    const double eb =
        b.arclength + frac(rng) * (b.path->length() - b.arclength);
    const ReachArea ra =
        widen({"a", a.arclength, ea, std::nullopt}, a, params);
    const ReachArea rb =
        widen({"b", b.arclength, eb, std::nullopt}, b, params);
    const bool ab = overlaps(ra, rb);
    EXPECT_EQ(ab, overlaps(rb, ra));
    overlapping += ab;
  }
  // Sanity: the generator produces both outcomes.
  EXPECT_GT(overlapping, 5);
  EXPECT_LT(overlapping, 245);
}

TEST(OverlapsPropertyTest, ExtendingNeverRemovesOverlap) {
  Rng rng(505);
  const ReachParams params;
  for (int i = 0; i < 250; ++i) {
    const AgentState a = testing::random_agent(rng, "a");
    const AgentState b = testing::random_agent(rng, "b");
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    const double span_a = a.path->length() - a.arclength;
    const double ea_short = a.arclength + 0.4 * frac(rng) * span_a;
    const double ea_long =
        ea_short + frac(rng) * (a.path->length() - ea_short);
    const double eb = b.arclength + frac(rng) * (b.path->length() - b.arclength);
    const ReachArea rb = widen({"b", b.arclength, eb, std::nullopt}, b, params);
    const bool short_overlap = overlaps(
        widen({"a", a.arclength, ea_short, std::nullopt}, a, params), rb);
    const bool long_overlap = overlaps(
        widen({"a", a.arclength, ea_long, std::nullopt}, a, params), rb);
    EXPECT_LE(short_overlap, long_overlap);
  }
}

TEST(ReachIntervalPropertyTest, AddingCollisionPointsNeverExtends) {
  Rng rng(606);
  const ReachParams params;
  for (int i = 0; i < 250; ++i) {
    const AgentState a = testing::random_agent(rng, "a");
    // Collision points live where the encounter model can put them: within
    // the agent's kinematic reach over the horizon.
    const double reachable = std::min(
        a.path->length(), a.arclength + a.speed * params.horizon);
    std::uniform_real_distribution<double> ahead(a.arclength, reachable);
    std::vector<CollisionPoint> points;
    const int count = static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) {
      points.push_back(cp("a", "o" + std::to_string(k), ahead(rng)));
    }
    const double base_end = reach_interval(a, points, params).end;
    points.push_back(cp("a", "extra", ahead(rng)));
    const double with_extra = reach_interval(a, points, params).end;
    EXPECT_LE(with_extra, base_end + 1e-12);
  }
}

TEST(OverlapsPropertyTest, WellSeparatedParallelPathsNeverOverlap) {
  Rng rng(707);
  const ReachParams params;
  for (int i = 0; i < 200; ++i) {
    std::uniform_real_distribution<double> x0(-40.0, 40.0);
    std::uniform_real_distribution<double> len(20.0, 100.0);
    const Footprint fa{4.5, 2.0};
    const Footprint fb{8.0, 2.5};
    // Lateral separation beyond every widening term.
    const double separation = 0.5 * (fa.width + fb.width) +
                              0.5 * (fa.length + fb.length) + 1.0;
    const AgentState a = {"a", straight_path({x0(rng), 0}, {x0(rng) + len(rng), 0}),
                          0.0, 5.0, fa};
    const AgentState b = {"b",
                          straight_path({x0(rng), separation},
                                        {x0(rng) + len(rng), separation}),
                          0.0, 5.0, fb};
    const ReachArea ra =
        widen({"a", 0.0, a.path->length(), std::nullopt}, a, params);
    const ReachArea rb =
        widen({"b", 0.0, b.path->length(), std::nullopt}, b, params);
    EXPECT_FALSE(overlaps(ra, rb));
  }
}

}  // namespace
}  // namespace riskshadow
