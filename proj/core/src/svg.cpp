// Copyright 2026 The Scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scramble/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  return mag * (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0);
}

std::vector<double> ticks(double lo, double hi, bool log) {
  std::vector<double> out;
  if (log) {
    for (double e = std::ceil(std::log10(lo) - 1e-9); e <= std::log10(hi) + 1e-9; e += 1.0)
      out.push_back(std::pow(10.0, e));
    return out;
  }
  const double step = nice_step(hi - lo);
  for (double v = std::ceil(lo / step - 1e-9) * step; v <= hi + step * 1e-9; v += step)
    out.push_back(v);
  return out;
}

void pad_range(double& lo, double& hi, bool log) {
  if (log) {
    if (hi / lo < 10.0) {
      lo /= std::sqrt(10.0 * lo / hi);
      hi = lo * 10.0;
    }
    return;
  }
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
    return;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
}

}  // namespace

std::pair<double, double> PlotFrame::map(double x, double y) const {
  auto unit = [this](double v, double lo, double hi) {
    return loglog ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                  : (v - lo) / (hi - lo);
  };
  return {left + unit(x, x_min, x_max) * (right - left),
          bottom - unit(y, y_min, y_max) * (bottom - top)};
}

PlotFrame plot_frame(const std::vector<PlotSeries>& series, const PlotOptions& options) {
  PlotFrame f;
  f.loglog = options.loglog;
  f.left = 80.0;
  f.right = options.width - 170.0;
  f.top = 40.0;
  f.bottom = options.height - 60.0;

  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw ArgumentError("plot series '" + s.label + "': x/y length mismatch");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double x = s.x[i], y = s.y[i];
      if (!std::isfinite(x) || !std::isfinite(y))
        throw ArgumentError("plot series '" + s.label + "': non-finite value");
      if (options.loglog && (x <= 0.0 || y <= 0.0))
        throw ArgumentError("plot series '" + s.label + "': non-positive value on a log axis");
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  }
  if (!std::isfinite(xlo)) {
    xlo = options.loglog ? 1.0 : 0.0;
    xhi = options.loglog ? 10.0 : 1.0;
    ylo = xlo;
    yhi = xhi;
  }
  pad_range(xlo, xhi, options.loglog);
  pad_range(ylo, yhi, options.loglog);
  f.x_min = xlo;
  f.x_max = xhi;
  f.y_min = ylo;
  f.y_max = yhi;
  return f;
}

std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& options) {
  const PlotFrame f = plot_frame(series, options);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width) << "\" height=\""
      << num(options.height) << "\" viewBox=\"0 0 " << num(options.width) << ' ' << num(options.height)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty())
    svg << "<text x=\"" << num((f.left + f.right) / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << escape(options.title) << "</text>\n";

  svg << "<g class=\"axes\" stroke=\"#999\" stroke-width=\"0.5\">\n";
  for (double t : ticks(f.x_min, f.x_max, f.loglog)) {
    const double px = f.map(t, f.y_min).first;
    svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(f.top) << "\" x2=\"" << num(px) << "\" y2=\""
        << num(f.bottom) << "\"/>\n";
    svg << "<text x=\"" << num(px) << "\" y=\"" << num(f.bottom + 16) << "\" text-anchor=\"middle\" stroke=\"none\">"
        << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(f.y_min, f.y_max, f.loglog)) {
    const double py = f.map(f.x_min, t).second;
    svg << "<line x1=\"" << num(f.left) << "\" y1=\"" << num(py) << "\" x2=\"" << num(f.right) << "\" y2=\""
        << num(py) << "\"/>\n";
    svg << "<text x=\"" << num(f.left - 6) << "\" y=\"" << num(py + 4) << "\" text-anchor=\"end\" stroke=\"none\">"
        << tick_label(t) << "</text>\n";
  }
  svg << "<rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\"" << num(f.right - f.left)
      << "\" height=\"" << num(f.bottom - f.top) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "</g>\n";
  svg << "<text x=\"" << num((f.left + f.right) / 2) << "\" y=\"" << num(options.height - 18)
      << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n";
  svg << "<text transform=\"translate(20 " << num((f.top + f.bottom) / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(options.y_label) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % kPalette.size()];
    if (s.x.size() == 1) {
      const auto [px, py] = f.map(s.x[0], s.y[0]);
      svg << "<circle class=\"marker\" cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"3.5\" fill=\""
          << color << "\"/>\n";
    } else if (s.x.size() > 1) {
      svg << "<polyline class=\"series\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        const auto [px, py] = f.map(s.x[i], s.y[i]);
        svg << (i ? " " : "") << num(px) << ',' << num(py);
      }
      svg << "\"/>\n";
    }
    const double ly = f.top + 14.0 + 18.0 * static_cast<double>(k);
    svg << "<line x1=\"" << num(f.right + 12) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(f.right + 32)
        << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << num(f.right + 38) << "\" y=\"" << num(ly) << "\">" << escape(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace scramble
