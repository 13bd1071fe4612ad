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

#include "scramble/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

constexpr double kStructureTolerance = 1e-6;
constexpr double kSelfDualTolerance = 1e-8;

struct Trajectory {
  double h_x;
  InitialStateKind init;
  int num_sites;
  Period tau;
};

auto key_tuple(const RecordKey& k) {
  return std::make_tuple(static_cast<int>(k.model), k.h_x, static_cast<int>(k.init), k.num_sites,
                         k.tau.value(), k.ell);
}

std::vector<SweepRecord> run_trajectory(const ExperimentSpec& spec, const Trajectory& traj) {
  const auto ells = spec.ells_for(traj.num_sites);
  std::vector<SweepRecord> records;
  std::vector<Partition> parts;
  std::vector<std::size_t> slots;
  for (int ell : ells) {
    SweepRecord r;
    r.key = {spec.model, traj.h_x, traj.init, traj.num_sites, traj.tau, ell};
    if (ell < 1 || ell > traj.num_sites - 2) {
      r.error = "ell outside [1, N-2]";
    } else {
      parts.emplace_back(traj.num_sites, ell);
      slots.push_back(records.size());
    }
    records.push_back(std::move(r));
  }
  if (parts.empty()) return records;

  ModelParams params;
  params.J = spec.J;
  params.h_x = traj.h_x;
  params.h_z = spec.h_z;
  params.tau = traj.tau;
  params.num_sites = traj.num_sites;

  try {
    auto series = spec.model == ModelKind::Floquet
                      ? tmi_time_series(params, parts, traj.init, spec.steps, spec.method)
                      : tfim_time_series(params, parts, traj.init, spec.time_grid(), spec.method);
    for (std::size_t k = 0; k < series.size(); ++k) {
      SweepRecord& r = records[slots[k]];
      try {
        r.i3_avg = spec.model == ModelKind::Floquet
                       ? averaged_tmi(series[k], spec.t1, spec.t2)
                       : averaged_tmi_continuous(series[k], spec.t1, spec.t2);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      if (spec.fit) {
        try {
          r.fit = fit_power_law(series[k], spec.fit_options);
        } catch (const FitInfeasibleError& e) {
          r.fit_error = e.what();
        }
      }
      r.series = std::move(series[k]);
    }
  } catch (const std::exception& e) {
    for (std::size_t slot : slots) records[slot].error = e.what();
  }
  return records;
}

void mark_minima(std::vector<SweepRecord>& records) {
  // Records are sorted, so each (model, h_x, init, N, tau) group is contiguous.
  std::size_t begin = 0;
  while (begin < records.size()) {
    std::size_t end = begin + 1;
    const auto same_group = [&](const RecordKey& a, const RecordKey& b) {
      return a.model == b.model && a.h_x == b.h_x && a.init == b.init && a.num_sites == b.num_sites &&
             a.tau == b.tau;
    };
    while (end < records.size() && same_group(records[begin].key, records[end].key)) ++end;
    std::optional<std::size_t> best;
    for (std::size_t k = begin; k < end; ++k)
      if (records[k].ok() && (!best || records[k].i3_avg < records[*best].i3_avg)) best = k;
    if (best) records[*best].is_minimum = true;
    begin = end;
  }
}

}  // namespace

bool RecordKey::operator<(const RecordKey& other) const { return key_tuple(*this) < key_tuple(other); }

bool RecordKey::operator==(const RecordKey& other) const {
  return model == other.model && h_x == other.h_x && init == other.init &&
         num_sites == other.num_sites && tau == other.tau && ell == other.ell;
}

void ExperimentSpec::validate() const {
  if (sizes.empty()) throw ArgumentError("experiment needs at least one chain length");
  for (int n : sizes) {
    if (n < 3) throw ArgumentError("chain length N must be at least 3 for a partition");
    if (n > kMaxExperimentSites) throw ArgumentError("N = " + std::to_string(n) + " exceeds the 2^12 amplitude budget");
  }
  if (inits.empty()) throw ArgumentError("experiment needs at least one initial state");
  if (h_x_values.empty()) throw ArgumentError("experiment needs at least one h_x value");
  if (!(t2 > t1) || t1 < 0) throw ArgumentError("averaging window needs 0 <= T1 < T2");
  if (model == ModelKind::Floquet) {
    if (taus.empty()) throw ArgumentError("Floquet experiment needs a non-empty tau list");
    for (const auto& tau : taus)
      if (!(tau.value() >= 0.0)) throw ArgumentError("sweep periods must be non-negative");
    if (steps < t2) throw ArgumentError("steps must cover T2");
  } else {
    if (!(dt > 0.0)) throw ArgumentError("TFIM grid spacing must be positive");
    if (t_end + 1e-9 < t2) throw ArgumentError("t_end must cover T2");
  }
}

std::vector<int> ExperimentSpec::ells_for(int num_sites) const {
  if (!ells.empty()) return ells;
  std::vector<int> out;
  for (int ell = 1; ell <= num_sites - 2; ++ell) out.push_back(ell);
  return out;
}

std::size_t ExperimentSpec::grid_size() const {
  std::size_t per_n = 0;
  for (int n : sizes) per_n += ells_for(n).size();
  const std::size_t tau_count = model == ModelKind::Floquet ? taus.size() : 1;
  return per_n * tau_count * inits.size() * h_x_values.size();
}

TimeGrid ExperimentSpec::time_grid() const {
  return TimeGrid{dt, static_cast<std::size_t>(std::llround(t_end / dt))};
}

const SweepRecord* SweepResult::find(const RecordKey& key) const {
  auto it = std::lower_bound(records.begin(), records.end(), key,
                             [](const SweepRecord& r, const RecordKey& k) { return r.key < k; });
  if (it != records.end() && it->key == key) return &*it;
  return nullptr;
}

int default_thread_count() {
  if (const char* env = std::getenv("SCRAMBLE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepResult run_sweep(const ExperimentSpec& spec, int threads) {
  spec.validate();
  std::vector<Trajectory> work;
  const std::vector<Period> taus =
      spec.model == ModelKind::Floquet ? spec.taus : std::vector<Period>{Period::pi_fraction(0, 1)};
  for (double hx : spec.h_x_values)
    for (auto init : spec.inits)
      for (int n : spec.sizes)
        for (const auto& tau : taus) work.push_back({hx, init, n, tau});

  std::vector<std::vector<SweepRecord>> slots(work.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) slots[i] = run_trajectory(spec, work[i]);
  };
  const int count = std::max(1, std::min<int>(threads > 0 ? threads : default_thread_count(),
                                              static_cast<int>(work.size())));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }

  SweepResult result;
  result.spec = spec;
  for (auto& s : slots)
    for (auto& r : s) result.records.push_back(std::move(r));
  std::sort(result.records.begin(), result.records.end(),
            [](const SweepRecord& a, const SweepRecord& b) { return a.key < b.key; });
  mark_minima(result.records);
  return result;
}

std::vector<MinimumRow> extract_minima(const SweepResult& result) {
  using GroupKey = std::tuple<int, double, int, double, int>;
  std::map<GroupKey, std::vector<const SweepRecord*>> groups;
  for (const auto& r : result.records) {
    const auto& k = r.key;
    groups[{static_cast<int>(k.model), k.h_x, static_cast<int>(k.init), k.tau.value(), k.num_sites}]
        .push_back(&r);
  }

  std::vector<MinimumRow> rows;
  for (const auto& [gk, recs] : groups) {
    const RecordKey& first = recs.front()->key;
    const int n = first.num_sites;
    std::map<int, double> by_ell;
    for (const auto* r : recs) {
      if (!r->ok())
        throw ArgumentError("sweep record N=" + std::to_string(n) + " ell=" + std::to_string(r->key.ell) +
                            " failed: " + r->error);
      by_ell[r->key.ell] = r->i3_avg;
    }
    for (int ell = 1; ell <= n - 2; ++ell)
      if (!by_ell.contains(ell))
        throw ArgumentError("incomplete ell sweep for N=" + std::to_string(n) + ": missing ell=" +
                            std::to_string(ell));

    MinimumRow row;
    row.model = first.model;
    row.h_x = first.h_x;
    row.init = first.init;
    row.tau = first.tau;
    row.num_sites = n;
    row.odd = n % 2 == 1;
    row.i3_min = std::numeric_limits<double>::infinity();
    for (int ell = 1; ell <= n - 2; ++ell)
      if (by_ell[ell] < row.i3_min) {
        row.i3_min = by_ell[ell];
        row.argmin_ell = ell;
      }
    if (row.odd) {
      row.structure_defect = by_ell[(n - 1) / 2] - row.i3_min;
    } else {
      const double lo = by_ell[(n - 2) / 2];
      const double hi = by_ell[n / 2];
      row.structure_defect = std::max(std::abs(lo - hi), std::min(lo, hi) - row.i3_min);
    }
    row.structure_ok = row.structure_defect <= kStructureTolerance;
    for (int ell = 1; ell <= n - 2; ++ell)
      row.mirror_defect = std::max(row.mirror_defect, std::abs(by_ell[ell] - by_ell[n - 1 - ell]));
    rows.push_back(row);
  }
  return rows;
}

SelfDualReport self_dual_report(int num_sites, int ell, const std::vector<InitialStateKind>& inits,
                                int kicks, int t1, int t2, double h_x) {
  if (num_sites % 2 == 0) throw ArgumentError("self-dual report expects odd N");
  if (inits.empty()) throw ArgumentError("self-dual report needs an initial state");
  if (kicks < t2) throw ArgumentError("kicks must cover T2");
  const Partition part(num_sites, ell);
  ModelParams params;
  params.J = 1.0;
  params.h_z = 1.0;
  params.h_x = h_x;
  params.tau = Period::pi_fraction(1, 4);
  params.num_sites = num_sites;

  SelfDualReport report;
  report.num_sites = num_sites;
  report.ell = ell;
  report.h_x = h_x;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (auto init : inits) {
    SelfDualTrajectory traj;
    traj.init = init;
    traj.series = tmi_time_series(params, part, init, kicks);
    traj.i3_avg = averaged_tmi(traj.series, t1, t2);
    const auto& s = traj.series.samples;
    for (std::size_t n = 0; n + static_cast<std::size_t>(num_sites) < s.size(); ++n)
      traj.period_defect = std::max(traj.period_defect, std::abs(s[n + num_sites].i3 - s[n].i3));
    traj.periodic = traj.period_defect <= kSelfDualTolerance;
    if (h_x == 0.0 && !traj.periodic)
      report.failures.push_back(std::string(to_string(init)) + ": I3 not periodic with period N (defect " +
                                std::to_string(traj.period_defect) + ")");
    lo = std::min(lo, traj.i3_avg);
    hi = std::max(hi, traj.i3_avg);
    report.trajectories.push_back(std::move(traj));
  }
  report.average_spread = hi - lo;
  report.averages_agree = report.average_spread < kSelfDualTolerance;
  if (!report.averages_agree)
    report.failures.push_back("averaged I3 differs across initial states by " +
                              std::to_string(report.average_spread));
  return report;
}

}  // namespace scramble
