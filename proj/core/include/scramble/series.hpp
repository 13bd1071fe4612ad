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
#include <string_view>
#include <vector>

#include "scramble/model.hpp"
#include "scramble/scrambling.hpp"

namespace scramble {

enum class ModelKind { Floquet, Tfim };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);

struct TmiSample {
  double time = 0.0;  ///< kick count n (Floquet) or continuous t (TFIM)
  double i3 = 0.0;
  EntropySet entropies;
};

/// I3 over time for one trajectory and one partition.
struct TmiSeries {
  ModelKind model = ModelKind::Floquet;
  ModelParams params;
  Partition partition{3, 1};
  InitialStateKind init = InitialStateKind::AllUp;
  std::vector<TmiSample> samples;

  std::vector<double> times() const;
  std::vector<double> i3_values() const;
};

/// Uniform continuous-time grid t_k = k * dt, k = 0..steps.
struct TimeGrid {
  double dt = 0.1;
  std::size_t steps = 5000;

  double end() const { return dt * static_cast<double>(steps); }
};

/// Samples I3 after every kick n = 0..kicks; the state is advanced one period
/// at a time.
TmiSeries tmi_time_series(const ModelParams& params, const Partition& part, InitialStateKind init,
                          int kicks, EntropyMethod method = EntropyMethod::Schmidt);

/// One trajectory measured on several partitions of the same chain. Output
/// order matches `parts`.
std::vector<TmiSeries> tmi_time_series(const ModelParams& params, std::span<const Partition> parts,
                                       InitialStateKind init, int kicks,
                                       EntropyMethod method = EntropyMethod::Schmidt);

/// Continuous evolution under the transverse-field Hamiltonian on a uniform grid.
TmiSeries tfim_time_series(const ModelParams& params, const Partition& part, InitialStateKind init,
                           const TimeGrid& grid, EntropyMethod method = EntropyMethod::Schmidt);

std::vector<TmiSeries> tfim_time_series(const ModelParams& params, std::span<const Partition> parts,
                                        InitialStateKind init, const TimeGrid& grid,
                                        EntropyMethod method = EntropyMethod::Schmidt);

/// Mean of I3(n) over n = t1..t2 inclusive, divided by the term count
/// t2 - t1 + 1. ArgumentError if any kick in the range is missing.
double averaged_tmi(const TmiSeries& series, int t1, int t2);

/// Trapezoidal integral of I3 over [t1, t2] divided by t2 - t1. Requires a
/// uniform grid with t1 and t2 on grid points.
double averaged_tmi_continuous(const TmiSeries& series, double t1, double t2);

/// Per-kick entropy bookkeeping (all seven entropies and I3) for n = 0..kicks.
std::vector<TmiSample> entropy_table(const ModelParams& params, const Partition& part,
                                     InitialStateKind init, int kicks);

}  // namespace scramble
