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

#include "riskshadow/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace riskshadow {

namespace {

constexpr double kMinWaypointSeparation = 1e-9;

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squared_norm();
  if (len2 == 0.0) {
    return (p - a).norm();
  }
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + ab * t)).norm();
}

double orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b - a).cross(c - a);
}

bool on_segment_collinear(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Center containment in the rectangle's local frame, boundary inclusive.
bool point_in_rectangle(const Vec2& p, const Pose2D& pose, const Footprint& fp) {
  const double c = std::cos(pose.heading);
  const double s = std::sin(pose.heading);
  const Vec2 d = p - pose.position;
  const double local_x = c * d.x + s * d.y;
  const double local_y = -s * d.x + c * d.y;
  return std::abs(local_x) <= 0.5 * fp.length && std::abs(local_y) <= 0.5 * fp.width;
}

}  // namespace

double normalize_angle(double radians) {
  double r = std::fmod(radians + M_PI, 2.0 * M_PI);
  if (r <= 0.0) {
    r += 2.0 * M_PI;
  }
  return r - M_PI;
}

void validate(const Footprint& footprint) {
  if (!(footprint.length > 0.0) || !(footprint.width > 0.0) ||
      !std::isfinite(footprint.length) || !std::isfinite(footprint.width)) {
    std::ostringstream msg;
    msg << "footprint extents must be strictly positive, got length="
        << footprint.length << " width=" << footprint.width;
    throw std::invalid_argument(msg.str());
  }
}

Path::Path(std::vector<Vec2> waypoints) : waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 2) {
    throw std::invalid_argument("path needs at least 2 waypoints, got " +
                                std::to_string(waypoints_.size()));
  }
  cumulative_.reserve(waypoints_.size());
  cumulative_.push_back(0.0);
  for (std::size_t i = 1; i < waypoints_.size(); ++i) {
    const double step = (waypoints_[i] - waypoints_[i - 1]).norm();
    if (step <= kMinWaypointSeparation) {
      std::ostringstream msg;
      msg << "consecutive waypoints " << (i - 1) << " and " << i
          << " are not distinct (separation " << step << " m)";
      throw std::invalid_argument(msg.str());
    }
    cumulative_.push_back(cumulative_.back() + step);
  }
}

std::size_t Path::segment_index(double arclength) const {
  const auto it =
      std::upper_bound(cumulative_.begin(), cumulative_.end(), arclength);
  const std::size_t idx = static_cast<std::size_t>(
      std::max<std::ptrdiff_t>(0, it - cumulative_.begin() - 1));
  return std::min(idx, waypoints_.size() - 2);
}

Pose2D Path::position_at(double arclength) const {
  if (!(arclength >= 0.0) || arclength > length()) {
    std::ostringstream msg;
    msg << "arclength " << arclength << " outside [0, " << length() << "]";
    throw std::out_of_range(msg.str());
  }
  const std::size_t i = segment_index(arclength);
  const Vec2 a = waypoints_[i];
  const Vec2 b = waypoints_[i + 1];
  const double seg_len = cumulative_[i + 1] - cumulative_[i];
  const double t = (arclength - cumulative_[i]) / seg_len;
  const Vec2 dir = b - a;
  return {a + dir * t, std::atan2(dir.y, dir.x)};
}

double Path::heading_at(double arclength) const {
  const std::size_t i = segment_index(std::clamp(arclength, 0.0, length()));
  const Vec2 dir = waypoints_[i + 1] - waypoints_[i];
  return std::atan2(dir.y, dir.x);
}

Path::Projection Path::project(const Vec2& point) const {
  double best_dist = std::numeric_limits<double>::infinity();
  Projection best;
  Vec2 best_dir;
  Vec2 best_point;
  for (std::size_t i = 0; i + 1 < waypoints_.size(); ++i) {
    const Vec2 a = waypoints_[i];
    const Vec2 ab = waypoints_[i + 1] - a;
    const double t =
        std::clamp((point - a).dot(ab) / ab.squared_norm(), 0.0, 1.0);
    const Vec2 q = a + ab * t;
    const double dist = (point - q).norm();
    // Scanning in ascending arc length keeps the smaller-l candidate on ties.
    if (dist < best_dist) {
      best_dist = dist;
      best.arclength = cumulative_[i] + t * (cumulative_[i + 1] - cumulative_[i]);
      best_dir = ab;
      best_point = q;
    }
  }
  const double side = best_dir.cross(point - best_point);
  best.lateral_offset = side < 0.0 ? -best_dist : best_dist;
  return best;
}

std::vector<Vec2> rectangle_corners(const Pose2D& pose, const Footprint& fp) {
  const double c = std::cos(pose.heading);
  const double s = std::sin(pose.heading);
  const Vec2 axis{c, s};
  const Vec2 ortho{-s, c};
  const Vec2 half_l = axis * (0.5 * fp.length);
  const Vec2 half_w = ortho * (0.5 * fp.width);
  return {pose.position + half_l + half_w, pose.position - half_l + half_w,
          pose.position - half_l - half_w, pose.position + half_l - half_w};
}

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                        const Vec2& q2) {
  const double d1 = orientation(q1, q2, p1);
  const double d2 = orientation(q1, q2, p2);
  const double d3 = orientation(p1, p2, q1);
  const double d4 = orientation(p1, p2, q2);
  if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
      ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
    return true;
  }
  if (d1 == 0.0 && on_segment_collinear(q1, q2, p1)) return true;
  if (d2 == 0.0 && on_segment_collinear(q1, q2, p2)) return true;
  if (d3 == 0.0 && on_segment_collinear(p1, p2, q1)) return true;
  if (d4 == 0.0 && on_segment_collinear(p1, p2, q2)) return true;
  return false;
}

double segment_distance(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                        const Vec2& q2) {
  if (segments_intersect(p1, p2, q1, q2)) {
    return 0.0;
  }
  return std::min(std::min(point_segment_distance(p1, q1, q2),
                           point_segment_distance(p2, q1, q2)),
                  std::min(point_segment_distance(q1, p1, p2),
                           point_segment_distance(q2, p1, p2)));
}

double rectangle_distance(const Pose2D& pose_a, const Footprint& fp_a,
                          const Pose2D& pose_b, const Footprint& fp_b) {
  // Full containment has no boundary crossing; it is caught by the centers.
  if (point_in_rectangle(pose_b.position, pose_a, fp_a) ||
      point_in_rectangle(pose_a.position, pose_b, fp_b)) {
    return 0.0;
  }
  const std::vector<Vec2> ca = rectangle_corners(pose_a, fp_a);
  const std::vector<Vec2> cb = rectangle_corners(pose_b, fp_b);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec2& a1 = ca[i];
    const Vec2& a2 = ca[(i + 1) % 4];
    for (std::size_t j = 0; j < 4; ++j) {
      best = std::min(best, segment_distance(a1, a2, cb[j], cb[(j + 1) % 4]));
      if (best == 0.0) {
        return 0.0;
      }
    }
  }
  return best;
}

bool point_in_polygon(const Vec2& point, const std::vector<Vec2>& polygon) {
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = polygon[j];
    const Vec2& b = polygon[i];
    if (orientation(a, b, point) == 0.0 && on_segment_collinear(a, b, point)) {
      return true;  // boundary counts as inside
    }
    if ((b.y > point.y) != (a.y > point.y)) {
      const double x_cross = b.x + (point.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (point.x < x_cross) {
        inside = !inside;
      }
    }
  }
  return inside;
}

}  // namespace riskshadow
