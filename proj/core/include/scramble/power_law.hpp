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

#include <cstddef>
#include <span>

#include "scramble/series.hpp"

namespace scramble {

struct FitOptions {
  /// I3 must drop below -delta (after sitting at or above it) to open the window.
  double delta = 0.02;
  /// Width of the centred moving average of 1 - I3 that closes the window.
  int smoothing = 3;
  std::size_t min_points = 4;
};

/// (1 - I3) ~ prefactor * t^exponent over samples window_start..window_end
/// (inclusive, indices into the series).
struct FitResult {
  double exponent = 0.0;
  double log_prefactor = 0.0;
  std::size_t window_start = 0;
  std::size_t window_end = 0;
  double rms_residual = 0.0;
};

/// Least-squares line through (log t, log(1 - I3)) over the early growth window.
///
/// The window opens at the first sample where I3 < -delta while the previous
/// sample was >= -delta, and closes at the last sample before the moving
/// average of 1 - I3 stops increasing. FitInfeasibleError when no window with
/// at least `min_points` samples exists.
FitResult fit_power_law(std::span<const double> times, std::span<const double> i3,
                        const FitOptions& options = {});

FitResult fit_power_law(const TmiSeries& series, const FitOptions& options = {});

}  // namespace scramble
