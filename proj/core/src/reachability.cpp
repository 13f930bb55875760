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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace riskshadow {

namespace {

constexpr double kPointMergeTolerance = 1e-9;
constexpr double kMaxMiterScale = 3.0;

Vec2 unit(const Vec2& v) {
  const double n = v.norm();
  return n > 0.0 ? Vec2{v.x / n, v.y / n} : Vec2{1.0, 0.0};
}

Vec2 left_normal(const Vec2& dir) { return {-dir.y, dir.x}; }

}  // namespace

ReachInterval reach_interval(const AgentState& agent,
                             std::span<const CollisionPoint> collision_points,
                             const ReachParams& params) {
  validate(agent);
  const double path_length = agent.path->length();

  ReachInterval interval;
  interval.agent_id = agent.id;
  interval.start = agent.arclength;

  const CollisionPoint* limiting = nullptr;
  for (const CollisionPoint& cp : collision_points) {
    if (cp.observer_id != agent.id) {
      throw std::invalid_argument("collision point observed by '" +
                                  cp.observer_id + "' passed to agent '" +
                                  agent.id + "'");
    }
    if (cp.arclength < agent.arclength - kPointMergeTolerance) {
      std::ostringstream msg;
      msg << "collision point with '" << cp.other_id << "' at arclength "
          << cp.arclength << " lies behind agent '" << agent.id << "' at "
          << agent.arclength;
      throw std::logic_error(msg.str());
    }
    if (limiting == nullptr || cp.arclength < limiting->arclength ||
        (cp.arclength == limiting->arclength &&
         cp.other_id < limiting->other_id)) {
      limiting = &cp;
    }
  }

  if (limiting != nullptr) {
    interval.end = std::min(path_length, limiting->arclength);
    interval.limiting_agent = limiting->other_id;
  } else {
    interval.end = std::min(
        path_length,
        agent.arclength + agent.speed * params.horizon + params.no_conflict_slack);
  }
  interval.end = std::min(path_length, interval.end + params.safety_margin);
  interval.end = std::max(interval.end, interval.start);
  return interval;
}

ReachArea widen(const ReachInterval& interval, const AgentState& agent,
                const ReachParams& params) {
  const Path& path = *agent.path;
  const double l0 = std::clamp(interval.start, 0.0, path.length());
  const double l1 = std::clamp(interval.end, l0, path.length());
  const double half_width = 0.5 * agent.footprint.width;
  const double half_length = 0.5 * agent.footprint.length;

  // Centerline of the slice: interval endpoints plus interior waypoints.
  std::vector<Vec2> centerline;
  centerline.push_back(path.position_at(l0).position);
  const auto& cum = path.cumulative_arclength();
  for (std::size_t i = 0; i < cum.size(); ++i) {
    if (cum[i] > l0 && cum[i] < l1) {
      centerline.push_back(path.waypoints()[i]);
    }
  }
  if (l1 > l0) {
    centerline.push_back(path.position_at(l1).position);
  }
  auto last = std::unique(centerline.begin(), centerline.end(),
                          [](const Vec2& a, const Vec2& b) {
                            return (a - b).norm() <= kPointMergeTolerance;
                          });
  centerline.erase(last, centerline.end());

  if (params.extend_by_half_length) {
    const double h0 = path.heading_at(l0);
    const double h1 = path.heading_at(l1);
    const Vec2 d0{std::cos(h0), std::sin(h0)};
    const Vec2 d1{std::cos(h1), std::sin(h1)};
    centerline.insert(centerline.begin(),
                      centerline.front() - d0 * half_length);
    centerline.push_back(centerline.back() + d1 * half_length);
  }

  ReachArea area;
  area.interval = interval;

  if (centerline.size() == 1) {
    // Zero-length slice without extension: the strip degenerates to a
    // width-wide segment at the agent's position.
    const double h = path.heading_at(l0);
    const Vec2 n = left_normal({std::cos(h), std::sin(h)});
    const Vec2 p = centerline.front();
    area.polygon = {p + n * half_width, p - n * half_width,
                    p - n * half_width, p + n * half_width};
    return area;
  }

  std::vector<Vec2> left;
  std::vector<Vec2> right;
  left.reserve(centerline.size());
  right.reserve(centerline.size());
  for (std::size_t i = 0; i < centerline.size(); ++i) {
    Vec2 offset_dir;
    double scale = half_width;
    if (i == 0) {
      offset_dir = left_normal(unit(centerline[1] - centerline[0]));
    } else if (i + 1 == centerline.size()) {
      offset_dir = left_normal(unit(centerline[i] - centerline[i - 1]));
    } else {
      const Vec2 n_prev = left_normal(unit(centerline[i] - centerline[i - 1]));
      const Vec2 n_next = left_normal(unit(centerline[i + 1] - centerline[i]));
      const Vec2 miter = n_prev + n_next;
      if (miter.norm() <= kPointMergeTolerance) {
        offset_dir = n_prev;  // 180-degree fold, fall back to the incoming edge
      } else {
        offset_dir = unit(miter);
        const double cos_half = offset_dir.dot(n_prev);
        scale = half_width * std::min(kMaxMiterScale, 1.0 / std::max(cos_half, 1e-9));
      }
    }
    left.push_back(centerline[i] + offset_dir * scale);
    right.push_back(centerline[i] - offset_dir * scale);
  }

  area.polygon = std::move(left);
  area.polygon.insert(area.polygon.end(), right.rbegin(), right.rend());
  return area;
}

bool overlaps(const ReachArea& a, const ReachArea& b) {
  const std::vector<Vec2>& pa = a.polygon;
  const std::vector<Vec2>& pb = b.polygon;
  if (pa.empty() || pb.empty()) {
    return false;
  }
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const Vec2& a1 = pa[i];
    const Vec2& a2 = pa[(i + 1) % pa.size()];
    for (std::size_t j = 0; j < pb.size(); ++j) {
      if (segments_intersect(a1, a2, pb[j], pb[(j + 1) % pb.size()])) {
        return true;
      }
    }
  }
  for (const Vec2& v : pa) {
    if (point_in_polygon(v, pb)) {
      return true;
    }
  }
  for (const Vec2& v : pb) {
    if (point_in_polygon(v, pa)) {
      return true;
    }
  }
  return false;
}

}  // namespace riskshadow
