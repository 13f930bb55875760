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

#include <filesystem>
#include <string>
#include <vector>

#include "riskshadow/simulator.hpp"

namespace riskshadow {

/// JSON scenario format (schema in docs/formats.md). Parsing is strict about
/// required fields and value shapes; errors throw std::runtime_error with the
/// offending key. Serialize -> parse is lossless.
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& json_text);

void save_scenario(const Scenario& scenario, const std::filesystem::path& file);
Scenario load_scenario(const std::filesystem::path& file);

/// Loads every *.json scenario in a directory, sorted by name.
std::vector<Scenario> load_scenario_dir(const std::filesystem::path& dir);

/// Structural equality via the canonical JSON form.
bool scenario_equal(const Scenario& a, const Scenario& b);

}  // namespace riskshadow
