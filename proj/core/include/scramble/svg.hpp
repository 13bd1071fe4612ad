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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace scramble {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  bool loglog = false;
  std::string title;
  std::string x_label = "x";
  std::string y_label = "y";
  double width = 720.0;
  double height = 460.0;
};

/// Data range and the pixel box it is drawn into.
struct PlotFrame {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  double left = 0.0, right = 1.0, top = 0.0, bottom = 1.0;
  bool loglog = false;

  std::pair<double, double> map(double x, double y) const;
};

/// ArgumentError on mismatched x/y lengths, non-finite values, or a
/// non-positive value in log-log mode.
PlotFrame plot_frame(const std::vector<PlotSeries>& series, const PlotOptions& options);

/// Standalone SVG. A series with two or more points becomes a polyline; a
/// single point becomes a circle marker.
std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& options);

}  // namespace scramble
