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

#include <optional>
#include <string>
#include <vector>

#include "scramble/model.hpp"
#include "scramble/power_law.hpp"
#include "scramble/scrambling.hpp"
#include "scramble/series.hpp"

namespace scramble {

/// Largest chain the experiment drivers accept: N + 1 <= 12 qubits.
inline constexpr int kMaxExperimentSites = 11;

/// Grid of trajectories to simulate. Floquet periods are normally exact
/// multiples of pi (k*eps/2, pi/4, ...); raw radian values are accepted.
/// TFIM sweeps ignore the period axis.
struct ExperimentSpec {
  ModelKind model = ModelKind::Floquet;
  std::vector<int> sizes;
  std::vector<int> ells;  ///< empty selects every valid ell = 1..N-2
  std::vector<Period> taus;
  std::vector<InitialStateKind> inits;
  std::vector<double> h_x_values{0.0};
  double J = 1.0;
  double h_z = 1.0;

  int t1 = 100;
  int t2 = 500;
  int steps = 500;   ///< Floquet kicks
  double dt = 0.1;   ///< TFIM grid spacing
  double t_end = 500.0;

  bool fit = true;
  FitOptions fit_options;
  EntropyMethod method = EntropyMethod::Schmidt;

  /// ArgumentError on an empty axis, a negative Floquet period, a bad window
  /// or a size above the 2^12-amplitude budget.
  void validate() const;

  std::vector<int> ells_for(int num_sites) const;
  std::size_t grid_size() const;
  TimeGrid time_grid() const;
};

struct RecordKey {
  ModelKind model = ModelKind::Floquet;
  double h_x = 0.0;
  InitialStateKind init = InitialStateKind::AllUp;
  int num_sites = 0;
  Period tau;
  int ell = 0;

  bool operator<(const RecordKey& other) const;
  bool operator==(const RecordKey& other) const;
};

struct SweepRecord {
  RecordKey key;
  std::optional<TmiSeries> series;
  double i3_avg = 0.0;
  std::optional<FitResult> fit;
  std::string fit_error;
  std::string error;  ///< non-empty when the trajectory failed
  bool is_minimum = false;

  bool ok() const { return error.empty(); }
};

struct SweepResult {
  ExperimentSpec spec;
  std::vector<SweepRecord> records;  ///< sorted by key

  const SweepRecord* find(const RecordKey& key) const;
};

/// Worker count: SCRAMBLE_THREADS if set and positive, else hardware concurrency.
int default_thread_count();

/// Runs every grid point. Output is independent of `threads`; a failing
/// trajectory produces error records and the sweep continues.
SweepResult run_sweep(const ExperimentSpec& spec, int threads = 0);

struct MinimumRow {
  ModelKind model = ModelKind::Floquet;
  double h_x = 0.0;
  InitialStateKind init = InitialStateKind::AllUp;
  Period tau;
  int num_sites = 0;
  double i3_min = 0.0;
  int argmin_ell = 0;
  bool odd = false;
  /// Odd N: the minimum sits at ell = (N-1)/2. Even N: ell = (N-2)/2 and N/2
  /// tie within 1e-6 and hold the minimum.
  bool structure_ok = false;
  double structure_defect = 0.0;
  /// max |I3avg(ell) - I3avg(N-1-ell)|: reflection of the ring through site X.
  double mirror_defect = 0.0;
};

/// One row per (model, h_x, init, tau, N). ArgumentError when an ell sweep is
/// incomplete or contains failed records.
std::vector<MinimumRow> extract_minima(const SweepResult& result);

struct SelfDualTrajectory {
  InitialStateKind init = InitialStateKind::AllUp;
  TmiSeries series;
  double i3_avg = 0.0;
  double period_defect = 0.0;  ///< max |I3(n+N) - I3(n)|
  bool periodic = false;
};

struct SelfDualReport {
  int num_sites = 0;
  int ell = 0;
  double h_x = 0.0;
  std::vector<SelfDualTrajectory> trajectories;
  double average_spread = 0.0;  ///< max - min of I3_avg across initial states
  bool averages_agree = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Runs the tau = pi/4, J = h_z = 1 point. Periodicity with period N is
/// asserted only for h_x = 0; failures are reported, not thrown.
SelfDualReport self_dual_report(int num_sites, int ell, const std::vector<InitialStateKind>& inits,
                                int kicks = 500, int t1 = 100, int t2 = 500, double h_x = 0.0);

}  // namespace scramble
