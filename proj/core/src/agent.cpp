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

#include "riskshadow/agent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace riskshadow {

void validate(const AgentState& agent) {
  if (agent.id.empty()) {
    throw std::invalid_argument("agent id must be non-empty");
  }
  if (!agent.path) {
    throw std::invalid_argument("agent '" + agent.id + "' has no path");
  }
  validate(agent.footprint);
  if (!(agent.arclength >= 0.0) || agent.arclength > agent.path->length()) {
    std::ostringstream msg;
    msg << "agent '" << agent.id << "' arclength " << agent.arclength
        << " outside [0, " << agent.path->length() << "]";
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(agent.speed) || agent.speed < 0.0) {
    std::ostringstream msg;
    msg << "agent '" << agent.id << "' speed " << agent.speed
        << " must be finite and >= 0";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace riskshadow
