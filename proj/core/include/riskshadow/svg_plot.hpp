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

#include <span>
#include <string>
#include <vector>

#include "riskshadow/simulator.hpp"

namespace riskshadow {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
};

/// Minimal native line plot; no external plotting dependency.
std::string render_line_plot(const std::string& title,
                             const std::string& x_label,
                             const std::string& y_label,
                             std::span<const PlotSeries> series,
                             int width = 880, int height = 320);

/// Ego speed and acceleration vs. time, one color per trace (typically the
/// two modes overlaid), stacked into one SVG document.
std::string render_behavior_svg(std::span<const SimTrace> traces);

/// Filter decision (1 = filtered) per other agent vs. time.
std::string render_filter_timeline_svg(const SimTrace& trace);

}  // namespace riskshadow
