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

#include <cmath>
#include <vector>

namespace riskshadow {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2& o) const = default;

  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  constexpr double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  constexpr double squared_norm() const { return x * x + y * y; }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Wraps an angle into (-pi, pi].
double normalize_angle(double radians);

struct Pose2D {
  Vec2 position;
  double heading = 0.0;  // radians, normalized to (-pi, pi]
};

/// Axis lengths of a rectangular vehicle body. `length` runs along the
/// heading, `width` across it. Both must be strictly positive; no ordering
/// between them is required.
struct Footprint {
  double length = 0.0;
  double width = 0.0;
};

/// Throws std::invalid_argument if either extent is not strictly positive.
void validate(const Footprint& footprint);

/// Arc-length-parameterized polyline. All longitudinal quantities in the
/// system (agent positions, collision points, reachability intervals) live on
/// the arc length of one of these.
class Path {
 public:
  /// Requires at least two waypoints with consecutive points separated by
  /// more than 1e-9 m; throws std::invalid_argument otherwise.
  explicit Path(std::vector<Vec2> waypoints);

  const std::vector<Vec2>& waypoints() const { return waypoints_; }
  const std::vector<double>& cumulative_arclength() const { return cumulative_; }
  double length() const { return cumulative_.back(); }

  /// Pose on the polyline at the given arc length; the heading is the
  /// direction of the containing segment. Throws std::out_of_range (naming
  /// the offending value) if `arclength` is outside [0, length()].
  Pose2D position_at(double arclength) const;

  struct Projection {
    double arclength = 0.0;
    // Signed distance from the polyline to the projected point; positive on
    // the left of the travel direction.
    double lateral_offset = 0.0;
  };

  /// Nearest point on the polyline. Total: points beyond the ends project
  /// onto the endpoints. Ties between equidistant segments resolve to the
  /// smaller arc length.
  Projection project(const Vec2& point) const;

  /// Heading of the segment containing `arclength` (same convention as
  /// position_at).
  double heading_at(double arclength) const;

 private:
  std::size_t segment_index(double arclength) const;

  std::vector<Vec2> waypoints_;
  std::vector<double> cumulative_;
};

/// Minimum Euclidean distance between two oriented rectangles, exactly zero
/// when they touch or overlap. Computed from the 4x4 edge-pair segment
/// distances plus mutual center containment checks, so the result is exact up
/// to floating-point rounding.
double rectangle_distance(const Pose2D& pose_a, const Footprint& fp_a,
                          const Pose2D& pose_b, const Footprint& fp_b);

/// Corner positions of an oriented rectangle in counter-clockwise order.
std::vector<Vec2> rectangle_corners(const Pose2D& pose, const Footprint& fp);

/// Minimum distance between two closed segments [p1,p2] and [q1,q2].
double segment_distance(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                        const Vec2& q2);

/// True if the closed segments share at least one point.
bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                        const Vec2& q2);

/// Even-odd test treating the boundary as inside.
bool point_in_polygon(const Vec2& point, const std::vector<Vec2>& polygon);

}  // namespace riskshadow
