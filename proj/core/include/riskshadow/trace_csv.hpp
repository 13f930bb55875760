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

#include "riskshadow/simulator.hpp"

namespace riskshadow {

// Column sets are part of the tool contract (see docs/formats.md); the
// header strings below are pinned by golden tests.

std::string trace_csv_header();
std::string filter_csv_header();

/// One row per (time, agent). Planner columns are filled on ego rows only;
/// dist_to_ego is empty on the ego row.
std::string trace_to_csv(const SimTrace& trace);

/// One row per (time, other agent) from the risk-shadowing filter reports.
/// Empty (header only) for baseline traces.
std::string filter_reports_to_csv(const SimTrace& trace);

/// Fixed numeric formatting used in all CSV output ("." decimal separator,
/// shortest representation up to 10 significant digits).
std::string csv_number(double value);

}  // namespace riskshadow
