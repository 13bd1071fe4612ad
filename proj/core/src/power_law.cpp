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

#include "scramble/power_law.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "scramble/errors.hpp"

namespace scramble {

FitResult fit_power_law(std::span<const double> times, std::span<const double> i3,
                        const FitOptions& options) {
  if (times.size() != i3.size()) throw ArgumentError("time and I3 columns differ in length");
  if (options.smoothing < 1) throw ArgumentError("smoothing width must be positive");
  if (options.min_points < 2) throw ArgumentError("a fit needs at least two points");
  const std::size_t n = i3.size();

  std::size_t start = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (i3[k] < -options.delta && i3[k - 1] >= -options.delta && times[k] > 0.0) {
      start = k;
      break;
    }
  }
  if (start == 0) throw FitInfeasibleError("I3 never crosses below -delta");

  std::vector<double> growth(n);
  for (std::size_t k = 0; k < n; ++k) growth[k] = 1.0 - i3[k];
  const std::size_t half = static_cast<std::size_t>(options.smoothing) / 2;
  std::vector<double> smooth(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t lo = k >= half ? k - half : 0;
    const std::size_t hi = std::min(n - 1, k + half);
    double sum = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) sum += growth[j];
    smooth[k] = sum / static_cast<double>(hi - lo + 1);
  }
  std::size_t end = start;
  while (end + 1 < n && smooth[end + 1] > smooth[end]) ++end;

  const std::size_t count = end - start + 1;
  if (count < options.min_points)
    throw FitInfeasibleError("growth window [" + std::to_string(start) + ", " + std::to_string(end) +
                             "] has fewer than " + std::to_string(options.min_points) + " points");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::vector<double> xs(count), ys(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (growth[start + k] <= 0.0) throw FitInfeasibleError("1 - I3 not positive inside the window");
    xs[k] = std::log(times[start + k]);
    ys[k] = std::log(growth[start + k]);
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  const double m = static_cast<double>(count);
  const double denom = m * sxx - sx * sx;
  if (!(std::abs(denom) > 0.0)) throw FitInfeasibleError("degenerate time axis in the window");

  FitResult fit;
  fit.exponent = (m * sxy - sx * sy) / denom;
  fit.log_prefactor = (sy - fit.exponent * sx) / m;
  fit.window_start = start;
  fit.window_end = end;
  double ss = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double r = ys[k] - (fit.log_prefactor + fit.exponent * xs[k]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / m);
  return fit;
}

FitResult fit_power_law(const TmiSeries& series, const FitOptions& options) {
  const auto t = series.times();
  const auto y = series.i3_values();
  return fit_power_law(t, y, options);
}

}  // namespace scramble
