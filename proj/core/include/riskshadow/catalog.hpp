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

#include <string>
#include <vector>

#include "riskshadow/simulator.hpp"

namespace riskshadow {

/// Filter decision asserted over a closed time window (risk-shadowing mode).
struct FilterWindowExpectation {
  std::string other_id;
  bool filtered = false;
  double t_begin = 0.0;
  double t_end = 0.0;
};

/// max |ego accel| stays below `bound` over the whole run in `mode`.
struct AccelBoundExpectation {
  Mode mode = Mode::kRiskShadowing;
  double bound = 0.1;
};

/// Some ego accel sample in [t_begin, t_end] exceeds the signed threshold
/// (above: a > threshold; below: a < threshold).
struct AccelPhaseExpectation {
  Mode mode = Mode::kBaseline;
  bool above = true;
  double threshold = 0.3;
  double t_begin = 0.0;
  double t_end = 10.0;
};

struct Expectation {
  std::vector<FilterWindowExpectation> filter_windows;
  std::vector<AccelBoundExpectation> accel_bounds;
  std::vector<AccelPhaseExpectation> accel_phases;
  // Minimum ego-to-other shape distance stays strictly positive in both modes.
  bool require_positive_separation = true;
};

struct CatalogEntry {
  Scenario scenario;
  Expectation expectation;
  // One-line reconstruction note (what the scene encodes, assumptions made).
  std::string notes;
};

/// Built-in scenario library. Stable order, unique names.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_scenario(const std::string& name);

struct ExpectationCheck {
  std::string scenario;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Runs the scenario in every mode its expectation references and evaluates
/// each clause. This is the regression gate behind `riskshadow check`.
ExpectationCheck check_entry(const CatalogEntry& entry);

std::vector<ExpectationCheck> check_catalog();

}  // namespace riskshadow
