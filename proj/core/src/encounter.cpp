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

#include "riskshadow/encounter.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace riskshadow {

namespace {

constexpr double kRefineTolerance = 1e-3;  // s
constexpr double kDistanceTie = 1e-9;      // m

double pair_distance(const AgentState& a, const AgentState& b, double s) {
  return rectangle_distance(predict_position(a, s), a.footprint,
                            predict_position(b, s), b.footprint);
}

}  // namespace

void validate(const EncounterConfig& cfg) {
  // distance_threshold == 0 is allowed: the strict comparison in Eq.-style
  // thresholding then never fires, which the CLI uses to disable filtering.
  if (!(cfg.distance_threshold >= 0.0) || !(cfg.horizon > 0.0) ||
      !(cfg.prediction_dt > 0.0) || cfg.prediction_dt > cfg.horizon) {
    std::ostringstream msg;
    msg << "invalid encounter config: distance_threshold="
        << cfg.distance_threshold << " horizon=" << cfg.horizon
        << " prediction_dt=" << cfg.prediction_dt;
    throw std::invalid_argument(msg.str());
  }
}

double predicted_arclength(const AgentState& agent, double s) {
  return std::min(agent.arclength + agent.speed * s, agent.path->length());
}

Pose2D predict_position(const AgentState& agent, double s) {
  return agent.path->position_at(predicted_arclength(agent, s));
}

namespace {

// Golden-section search over [lo, hi]; ties shrink toward the left so flat
// valleys resolve to their earliest point.
std::pair<double, double> refine_bracket(const AgentState& a,
                                         const AgentState& b, double lo,
                                         double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = pair_distance(a, b, x1);
  double f2 = pair_distance(a, b, x2);
  while (hi - lo > kRefineTolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = pair_distance(a, b, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = pair_distance(a, b, x2);
    }
  }
  // The converged bracket is narrower than the tolerance; pick the best of
  // its edges and midpoint (ties toward smaller s) so flat-bottomed valleys
  // resolve to their earliest point.
  const double mid = 0.5 * (lo + hi);
  double best_s = lo;
  double best_d = pair_distance(a, b, lo);
  for (const double s : {mid, hi}) {
    const double d = pair_distance(a, b, s);
    if (d < best_d - kDistanceTie) {
      best_s = s;
      best_d = d;
    }
  }
  return {best_s, best_d};
}

}  // namespace

EncounterResult closest_encounter(const AgentState& a, const AgentState& b,
                                  const EncounterConfig& cfg) {
  // Coarse grid over [0, horizon], always including both endpoints.
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(cfg.horizon / cfg.prediction_dt) + 2);
  for (double s = 0.0; s < cfg.horizon; s += cfg.prediction_dt) {
    samples.push_back(s);
  }
  samples.push_back(cfg.horizon);

  std::vector<double> distances(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    distances[k] = pair_distance(a, b, samples[k]);
  }

  // Candidates: every grid sample plus a refinement of every bracket that
  // holds a local minimum. Refining all of them keeps near-tied valleys from
  // hiding the true one behind the grid resolution.
  std::vector<std::pair<double, double>> candidates;  // (s, d)
  candidates.reserve(samples.size() + 8);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    candidates.emplace_back(samples[k], distances[k]);
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const bool left_ok = k == 0 || distances[k] <= distances[k - 1];
    const bool right_ok =
        k + 1 == samples.size() || distances[k] <= distances[k + 1];
    if (!left_ok || !right_ok) {
      continue;
    }
    // Interior plateau points carry nothing a neighboring sample does not.
    const bool left_drop = k > 0 && distances[k] < distances[k - 1] - kDistanceTie;
    const bool right_drop =
        k + 1 < samples.size() && distances[k] < distances[k + 1] - kDistanceTie;
    if (!left_drop && !right_drop) {
      continue;
    }
    const double lo = std::max(0.0, samples[k] - cfg.prediction_dt);
    const double hi = std::min(cfg.horizon, samples[k] + cfg.prediction_dt);
    candidates.push_back(refine_bracket(a, b, lo, hi));
  }

  double min_d = candidates.front().second;
  for (const auto& [s, d] : candidates) {
    min_d = std::min(min_d, d);
  }

  // Ties resolve toward smaller s: take the earliest candidate attaining the
  // minimum, then bisect toward the earliest attaining time, so plateaus
  // (constant or asymptotically flattening distance) report their onset.
  double earliest = cfg.horizon;
  for (const auto& [s, d] : candidates) {
    if (d <= min_d + kDistanceTie) {
      earliest = std::min(earliest, s);
    }
  }
  double below = earliest;
  double above = 0.0;
  bool have_above = false;
  for (const auto& [s, d] : candidates) {
    if (s < below && d > min_d + kDistanceTie) {
      above = std::max(above, s);
      have_above = true;
    }
  }
  if (have_above) {
    while (below - above > kRefineTolerance) {
      const double mid = 0.5 * (above + below);
      if (pair_distance(a, b, mid) <= min_d + kDistanceTie) {
        below = mid;
      } else {
        above = mid;
      }
    }
  }

  EncounterResult result;
  result.tce = below;
  result.dce = pair_distance(a, b, below);
  result.pce = predict_position(a, below);
  result.pce_arclength = predicted_arclength(a, below);
  return result;
}

std::optional<CollisionPoint> collision_point(const AgentState& observer,
                                              const AgentState& other,
                                              const EncounterConfig& cfg) {
  const EncounterResult enc = closest_encounter(observer, other, cfg);
  if (!(enc.dce < cfg.distance_threshold)) {
    return std::nullopt;
  }
  CollisionPoint cp;
  cp.observer_id = observer.id;
  cp.other_id = other.id;
  cp.position = enc.pce;
  cp.arclength = enc.pce_arclength;
  cp.tce = enc.tce;
  return cp;
}

}  // namespace riskshadow
