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

#include "riskshadow/filter.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <sstream>

#include "riskshadow/catalog.hpp"
#include "test_support.hpp"

namespace riskshadow {
namespace {

using testing::Rng;
using testing::straight_path;

const FilterDecision& decision_for(const FilterReport& report,
                                   const std::string& id) {
  for (const FilterDecision& d : report.decisions) {
    if (d.other_id == id) {
      return d;
    }
  }
  throw std::runtime_error("no decision for " + id);
}

std::string serialize(const FilterReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << report.timestamp << '|' << report.encounter_count;
  for (const FilterDecision& d : report.decisions) {
    out << '|' << d.other_id << ':' << d.filtered << ':'
        << to_string(d.reason) << ':' << d.ego_area.interval.start << ':'
        << d.ego_area.interval.end << ':' << d.other_area.interval.start << ':'
        << d.other_area.interval.end;
  }
  return out.str();
}

// The introduction constellation: a fast car behind a slow truck on the road
// crossing the ego's corridor. The car's reach ends at the truck, west of the
// corridor; the truck stays relevant.
TEST(RunFilterTest, BlockedCarIsFilteredTruckIsNot) {
  const CatalogEntry* entry = find_scenario("snapshot_blocked_crossing");
  ASSERT_NE(entry, nullptr);
  const AgentState& ego = entry->scenario.agents[0].initial;
  std::vector<AgentState> others;
  for (std::size_t i = 1; i < entry->scenario.agents.size(); ++i) {
    others.push_back(entry->scenario.agents[i].initial);
  }
  const FilterReport report =
      run_filter(ego, others, entry->scenario.filter_cfg);

  const FilterDecision& car = decision_for(report, "car");
  EXPECT_TRUE(car.filtered);
  EXPECT_EQ(car.reason, FilterReason::kNoOverlap);
  ASSERT_TRUE(car.other_area.interval.limiting_agent.has_value());
  EXPECT_EQ(*car.other_area.interval.limiting_agent, "truck");

  const FilterDecision& truck = decision_for(report, "truck");
  EXPECT_FALSE(truck.filtered);
  EXPECT_EQ(truck.reason, FilterReason::kOverlap);
}

TEST(RunFilterTest, TwoAgentsMatchPlainOverlap) {
  const FilterConfig cfg;
  Rng rng(808);
  for (int i = 0; i < 50; ++i) {
    const AgentState ego = testing::random_agent(rng, "ego");
    const AgentState other = testing::random_agent(rng, "oth");
    const FilterReport report = run_filter(ego, {&other, 1}, cfg);
    ASSERT_EQ(report.decisions.size(), 1u);
    const FilterDecision& d = report.decisions.front();
    if (d.reason == FilterReason::kAlreadyPassed) {
      EXPECT_FALSE(d.filtered);
      continue;
    }
    EXPECT_EQ(d.filtered, !overlaps(d.ego_area, d.other_area));
  }
}

TEST(RunFilterTest, EqualSpeedConvoyNothingFiltered) {
  const auto lane = straight_path({0, -60}, {0, 100});
  const AgentState ego{"ego", lane, 15.0, 8.0, {4.5, 2.0}};
  const std::vector<AgentState> others{{"mid", lane, 40.0, 8.0, {4.5, 2.0}},
                                       {"lead", lane, 60.0, 8.0, {4.5, 2.0}}};
  const FilterReport report = run_filter(ego, others, FilterConfig{});
  for (const FilterDecision& d : report.decisions) {
    EXPECT_FALSE(d.filtered) << d.other_id;
  }
}

TEST(RunFilterTest, DuplicateIdsRejected) {
  const auto lane = straight_path({0, 0}, {100, 0});
  const AgentState ego{"ego", lane, 0.0, 5.0, {4.5, 2.0}};
  const std::vector<AgentState> others{{"a", lane, 20.0, 5.0, {4.5, 2.0}},
                                       {"a", lane, 40.0, 5.0, {4.5, 2.0}}};
  EXPECT_THROW(run_filter(ego, others, FilterConfig{}), std::invalid_argument);
  const std::vector<AgentState> ego_twice{{"ego", lane, 30.0, 5.0, {4.5, 2.0}}};
  EXPECT_THROW(run_filter(ego, ego_twice, FilterConfig{}),
               std::invalid_argument);
}

TEST(RunFilterTest, EncounterCountIsDirectedPairs) {
  Rng rng(909);
  for (const int n : {2, 3, 4, 8}) {
    std::vector<AgentState> agents;
    for (int i = 0; i < n; ++i) {
      agents.push_back(testing::random_agent(rng, "a" + std::to_string(i)));
    }
    const std::vector<AgentState> others(agents.begin() + 1, agents.end());
    const FilterReport report =
        run_filter(agents.front(), others, FilterConfig{});
    EXPECT_EQ(report.encounter_count, n * (n - 1));
  }
}

TEST(RunFilterTest, RecedingAgentTaggedAlreadyPassed) {
  // The other car has crossed and drives away; distance opens from t = 0.
  const AgentState ego{"ego", straight_path({0, -40}, {0, 60}), 46.0, 8.0,
                       {4.5, 2.0}};
  const AgentState other{"oth", straight_path({-40, 0}, {110, 0}), 48.0, 13.0,
                         {4.5, 2.0}};
  const FilterReport report = run_filter(ego, {&other, 1}, FilterConfig{});
  const FilterDecision& d = report.decisions.front();
  EXPECT_EQ(d.reason, FilterReason::kAlreadyPassed);
  EXPECT_FALSE(d.filtered);
}

TEST(RunFilterTest, FilteredIffNoOverlapInvariant) {
  Rng rng(1010);
  for (int i = 0; i < 100; ++i) {
    std::vector<AgentState> agents;
    for (int k = 0; k < 4; ++k) {
      agents.push_back(testing::random_agent(rng, "a" + std::to_string(k)));
    }
    const std::vector<AgentState> others(agents.begin() + 1, agents.end());
    const FilterReport report =
        run_filter(agents.front(), others, FilterConfig{});
    for (const FilterDecision& d : report.decisions) {
      EXPECT_EQ(d.filtered, d.reason == FilterReason::kNoOverlap);
    }
  }
}

TEST(RunFilterPropertyTest, RemovingNonLimitingAgentKeepsDecisions) {
  Rng rng(1111);
  const FilterConfig cfg;
  int exercised = 0;
  for (int i = 0; i < 250 || exercised < 50; ++i) {
    if (i > 2000) break;
    std::vector<AgentState> agents;
    for (int k = 0; k < 5; ++k) {
      agents.push_back(testing::random_agent(rng, "a" + std::to_string(k)));
    }
    std::vector<AgentState> others(agents.begin() + 1, agents.end());
    const FilterReport base = run_filter(agents.front(), others, cfg);

    // Pick an agent that limits nobody's reach interval.
    std::optional<std::string> removable;
    for (const AgentState& candidate : others) {
      bool limits = false;
      for (const FilterDecision& d : base.decisions) {
        if (d.other_area.interval.limiting_agent == candidate.id ||
            d.ego_area.interval.limiting_agent == candidate.id) {
          limits = true;
        }
      }
      if (!limits) {
        removable = candidate.id;
        break;
      }
    }
    if (!removable) {
      continue;
    }
    ++exercised;

    std::vector<AgentState> reduced;
    for (const AgentState& other : others) {
      if (other.id != *removable) {
        reduced.push_back(other);
      }
    }
    const FilterReport trimmed = run_filter(agents.front(), reduced, cfg);
    for (const FilterDecision& after : trimmed.decisions) {
      const FilterDecision& before = decision_for(base, after.other_id);
      EXPECT_EQ(before.filtered, after.filtered)
          << "removal of non-limiting '" << *removable
          << "' changed the decision for '" << after.other_id << "'";
      EXPECT_EQ(before.reason, after.reason);
    }
  }
  EXPECT_GE(exercised, 50);
}

TEST(RunFilterPropertyTest, MovingShadowerAwayRestoresPairDecision) {
  // With the truck effectively removed, the blocked car's decision must equal
  // the plain two-agent overlap outcome.
  const CatalogEntry* entry = find_scenario("snapshot_blocked_crossing");
  ASSERT_NE(entry, nullptr);
  const AgentState& ego = entry->scenario.agents[0].initial;
  AgentState car = entry->scenario.agents[1].initial;
  AgentState truck = entry->scenario.agents[2].initial;

  const std::vector<AgentState> with_truck{car, truck};
  const FilterReport blocked = run_filter(ego, with_truck, FilterConfig{});
  EXPECT_TRUE(decision_for(blocked, "car").filtered);

  // Send the shadowing truck far away.
  truck.path = straight_path({4000.0, 4000.0}, {4100.0, 4000.0});
  truck.arclength = 0.0;
  const std::vector<AgentState> truck_far{car, truck};
  const FilterReport open = run_filter(ego, truck_far, FilterConfig{});
  const FilterReport pair = run_filter(ego, {&car, 1}, FilterConfig{});
  EXPECT_EQ(decision_for(open, "car").filtered,
            pair.decisions.front().filtered);
  EXPECT_FALSE(decision_for(open, "car").filtered);
}

TEST(RunFilterPropertyTest, DeterministicAcrossRuns) {
  Rng rng(1212);
  const FilterConfig cfg;
  for (int i = 0; i < 200; ++i) {
    std::vector<AgentState> agents;
    for (int k = 0; k < 4; ++k) {
      agents.push_back(testing::random_agent(rng, "a" + std::to_string(k)));
    }
    const std::vector<AgentState> others(agents.begin() + 1, agents.end());
    const FilterReport first = run_filter(agents.front(), others, cfg, 1.5);
    const FilterReport second = run_filter(agents.front(), others, cfg, 1.5);
    EXPECT_EQ(serialize(first), serialize(second));
  }
}

}  // namespace
}  // namespace riskshadow
