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

#include "riskshadow/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace riskshadow {

namespace {

constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 120;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 40;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(hi > lo)) {
      lo -= 1.0;
      hi += 1.0;
    }
    const double span = hi - lo;
    lo -= 0.05 * span;
    hi += 0.05 * span;
  }
};

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4g", v);
  return buffer;
}

void plot_body(std::ostringstream& out, const std::string& title,
               const std::string& x_label, const std::string& y_label,
               std::span<const PlotSeries> series, int width, int height,
               int y_offset) {
  Range xr;
  Range yr;
  for (const PlotSeries& s : series) {
    for (double v : s.x) xr.include(v);
    for (double v : s.y) yr.include(v);
  }
  if (!std::isfinite(xr.lo) || !std::isfinite(yr.lo)) {
    xr = {0.0, 1.0};
    yr = {0.0, 1.0};
  }
  xr.pad();
  yr.pad();

  const double plot_w = width - kMarginLeft - kMarginRight;
  const double plot_h = height - kMarginTop - kMarginBottom;
  const auto map_x = [&](double v) {
    return kMarginLeft + (v - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto map_y = [&](double v) {
    return y_offset + kMarginTop + plot_h -
           (v - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << y_offset + kMarginTop
      << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
  out << "<text x=\"" << kMarginLeft << "\" y=\"" << y_offset + kMarginTop - 10
      << "\" font-size=\"13\" font-family=\"sans-serif\">" << title
      << "</text>\n";
  out << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\""
      << y_offset + kMarginTop + plot_h + 30
      << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">"
      << x_label << "</text>\n";
  out << "<text x=\"14\" y=\"" << y_offset + kMarginTop + plot_h / 2
      << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 14 " << y_offset + kMarginTop + plot_h / 2
      << ")\">" << y_label << "</text>\n";

  for (int tick = 0; tick <= 4; ++tick) {
    const double xv = xr.lo + tick * (xr.hi - xr.lo) / 4.0;
    const double yv = yr.lo + tick * (yr.hi - yr.lo) / 4.0;
    out << "<text x=\"" << map_x(xv) << "\" y=\""
        << y_offset + kMarginTop + plot_h + 14
        << "\" font-size=\"10\" font-family=\"sans-serif\" "
           "text-anchor=\"middle\">"
        << fmt(xv) << "</text>\n";
    out << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << map_y(yv) + 3
        << "\" font-size=\"10\" font-family=\"sans-serif\" "
           "text-anchor=\"end\">"
        << fmt(yv) << "</text>\n";
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << map_y(yv)
        << "\" x2=\"" << kMarginLeft + plot_w << "\" y2=\"" << map_y(yv)
        << "\" stroke=\"#ddd\"/>\n";
  }

  int color_index = 0;
  int legend_row = 0;
  for (const PlotSeries& s : series) {
    const std::string color =
        s.color.empty() ? kPalette[color_index % 6] : s.color;
    ++color_index;
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out << map_x(s.x[i]) << ',' << map_y(s.y[i]) << ' ';
    }
    out << "\"/>\n";
    const double ly = y_offset + kMarginTop + 12 + 16 * legend_row++;
    out << "<line x1=\"" << kMarginLeft + plot_w + 8 << "\" y1=\"" << ly
        << "\" x2=\"" << kMarginLeft + plot_w + 28 << "\" y2=\"" << ly
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kMarginLeft + plot_w + 32 << "\" y=\"" << ly + 4
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.label
        << "</text>\n";
  }
}

}  // namespace

std::string render_line_plot(const std::string& title,
                             const std::string& x_label,
                             const std::string& y_label,
                             std::span<const PlotSeries> series, int width,
                             int height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  plot_body(out, title, x_label, y_label, series, width, height, 0);
  out << "</svg>\n";
  return out.str();
}

std::string render_behavior_svg(std::span<const SimTrace> traces) {
  std::vector<PlotSeries> speed_series;
  std::vector<PlotSeries> accel_series;
  int color_index = 0;
  for (const SimTrace& trace : traces) {
    PlotSeries speed;
    PlotSeries accel;
    speed.label = to_string(trace.mode) + " v";
    accel.label = to_string(trace.mode) + " a";
    speed.color = kPalette[color_index % 6];
    accel.color = kPalette[color_index % 6];
    ++color_index;
    for (const StepRecord& step : trace.steps) {
      for (const AgentRecord& agent : step.agents) {
        if (agent.id == trace.ego_id) {
          speed.x.push_back(step.time);
          speed.y.push_back(agent.speed);
          accel.x.push_back(step.time);
          accel.y.push_back(agent.accel);
        }
      }
    }
    speed_series.push_back(std::move(speed));
    accel_series.push_back(std::move(accel));
  }

  const int width = 880;
  const int height = 320;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << 2 * height << "\">\n";
  plot_body(out, "ego speed", "time [s]", "v [m/s]", speed_series, width,
            height, 0);
  plot_body(out, "ego acceleration", "time [s]", "a [m/s^2]", accel_series,
            width, height, height);
  out << "</svg>\n";
  return out.str();
}

std::string render_filter_timeline_svg(const SimTrace& trace) {
  std::vector<PlotSeries> series;
  for (const StepRecord& step : trace.steps) {
    if (!step.filter) {
      continue;
    }
    for (const FilterDecision& decision : step.filter->decisions) {
      auto it = std::find_if(series.begin(), series.end(),
                             [&](const PlotSeries& s) {
                               return s.label == decision.other_id;
                             });
      if (it == series.end()) {
        PlotSeries s;
        s.label = decision.other_id;
        s.color = kPalette[series.size() % 6];
        series.push_back(std::move(s));
        it = series.end() - 1;
      }
      it->x.push_back(step.time);
      it->y.push_back(decision.filtered ? 1.0 : 0.0);
    }
  }
  return render_line_plot("filter timeline (1 = filtered)", "time [s]",
                          "filtered", series);
}

}  // namespace riskshadow
