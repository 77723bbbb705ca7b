// Copyright 2026 the nmbloch authors
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

#include "nmbloch/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "nmbloch/errors.hpp"

namespace nmbloch {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 56.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", v);
  return buf.data();
}

std::string fmt_tick(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%g", v);
  return buf.data();
}

// 1/2/5 ladder tick spacing producing 4..9 ticks.
double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      return m * mag;
    }
  }
  return 10.0 * mag;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(const std::vector<PlotCurve>& curves,
                              const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label) {
  if (curves.empty()) {
    throw config_error("plot: no curves given");
  }
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const PlotCurve& c : curves) {
    for (const auto& [x, y] : c.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!(x_min < x_max)) {
    x_max = x_min + 1.0;
  }
  if (!(y_min < y_max)) {
    y_max = y_min + 1.0;
  }
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto to_x = [&](double x) {
    return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w;
  };
  const auto to_y = [&](double y) {
    return kMarginTop + (y_max - y) / (y_max - y_min) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // axes frame
  svg << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop)
      << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // ticks + grid
  const double x_step = nice_step(x_max - x_min);
  for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9 * x_step;
       x += x_step) {
    const double px = to_x(x);
    svg << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(kMarginTop + plot_h)
        << "\" x2=\"" << fmt(px) << "\" y2=\""
        << fmt(kMarginTop + plot_h + 6.0) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt(px) << "\" y=\""
        << fmt(kMarginTop + plot_h + 22.0)
        << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << fmt_tick(x) << "</text>\n";
  }
  const double y_step = nice_step(y_max - y_min);
  for (double y = std::ceil(y_min / y_step) * y_step; y <= y_max + 1e-9 * y_step;
       y += y_step) {
    const double py = to_y(y);
    svg << "<line x1=\"" << fmt(kMarginLeft - 6.0) << "\" y1=\"" << fmt(py)
        << "\" x2=\"" << fmt(kMarginLeft) << "\" y2=\"" << fmt(py)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt(kMarginLeft - 10.0) << "\" y=\"" << fmt(py + 4.0)
        << "\" font-size=\"13\" text-anchor=\"end\" font-family=\"sans-serif\">"
        << fmt_tick(y) << "</text>\n";
  }

  // curves
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : curves[i].points) {
      svg << fmt(to_x(x)) << ',' << fmt(to_y(y)) << ' ';
    }
    svg << "\"/>\n";
  }

  // legend
  const double legend_x = kMarginLeft + plot_w - 180.0;
  double legend_y = kMarginTop + 14.0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg << "<line x1=\"" << fmt(legend_x) << "\" y1=\"" << fmt(legend_y - 4.0)
        << "\" x2=\"" << fmt(legend_x + 26.0) << "\" y2=\""
        << fmt(legend_y - 4.0) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fmt(legend_x + 32.0) << "\" y=\"" << fmt(legend_y)
        << "\" font-size=\"13\" font-family=\"sans-serif\">"
        << escape_xml(curves[i].label) << "</text>\n";
    legend_y += 18.0;
  }

  // labels
  if (!title.empty()) {
    svg << "<text x=\"" << fmt(kMarginLeft + plot_w / 2.0) << "\" y=\""
        << fmt(kMarginTop - 14.0)
        << "\" font-size=\"16\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << escape_xml(title) << "</text>\n";
  }
  svg << "<text x=\"" << fmt(kMarginLeft + plot_w / 2.0) << "\" y=\""
      << fmt(kHeight - 12.0)
      << "\" font-size=\"14\" text-anchor=\"middle\" font-family=\"sans-serif\">"
      << escape_xml(x_label) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << fmt(kMarginTop + plot_h / 2.0)
      << "\" font-size=\"14\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 18 "
      << fmt(kMarginTop + plot_h / 2.0) << ")\">" << escape_xml(y_label)
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace nmbloch
