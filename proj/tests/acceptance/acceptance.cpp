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

// One PASS/FAIL line per acceptance criterion. Optional arguments select
// criteria by number, e.g. `scramble_acceptance 1 2 7`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scramble/eigen.hpp"
#include "scramble/experiments.hpp"
#include "scramble/floquet.hpp"
#include "scramble/power_law.hpp"
#include "scramble/scrambling.hpp"
#include "scramble/series.hpp"
#include "scramble/tfim.hpp"
#include "test_support.hpp"

namespace {

using namespace scramble;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  ///< seconds, 0 = none
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const std::vector<InitialStateKind> kInits{InitialStateKind::AllUp, InitialStateKind::Neel};
const std::vector<double> kFields{0.0, 1.0};

std::string case_name(double hx, InitialStateKind init) {
  return std::string(hx == 0.0 ? "int" : "nonint") + "/" + std::string(to_string(init));
}

ModelParams floquet(int n, Period tau, double hx) {
  ModelParams p;
  p.num_sites = n;
  p.tau = tau;
  p.h_x = hx;
  return p;
}

Outcome entropy_table_golden() {
  constexpr int kI3[] = {0, 1, 0, -2, 0, 0, 0, 0, -2, 0, 1, 0};
  constexpr int kEntropy[12][7] = {
      {1, 0, 0, 1, 1, 0, 1}, {1, 2, 2, 1, 2, 1, 2}, {1, 4, 4, 1, 4, 2, 4}, {1, 5, 5, 1, 6, 2, 6},
      {1, 4, 4, 1, 4, 2, 4}, {1, 2, 2, 1, 2, 2, 2}, {1, 2, 2, 1, 2, 2, 2}, {1, 4, 4, 1, 4, 2, 4},
      {1, 5, 5, 1, 6, 2, 6}, {1, 4, 4, 1, 4, 2, 4}, {1, 2, 2, 1, 2, 1, 2}, {1, 0, 0, 1, 1, 0, 1}};
  const auto rows = entropy_table(floquet(11, Period::pi_fraction(1, 4), 0.0), Partition(11, 5),
                                  InitialStateKind::AllUp, 11);
  double worst = 0.0;
  for (int n = 0; n < 12; ++n) {
    const auto& e = rows[n].entropies;
    const double got[] = {e.s_x, e.s_y, e.s_z, e.s_xyz, e.s_xy, e.s_yz, e.s_zx};
    for (int c = 0; c < 7; ++c) worst = std::max(worst, std::abs(got[c] - kEntropy[n][c]));
    worst = std::max(worst, std::abs(rows[n].i3 - kI3[n]));
  }
  return {rows.size() == 12 && worst < 1e-8, "max deviation " + fmt("%.3g", worst)};
}

Outcome periodicity() {
  const auto s = tmi_time_series(floquet(11, Period::pi_fraction(1, 4), 0.0), Partition(11, 5),
                                 InitialStateKind::AllUp, 500);
  double period = 0.0, level = 0.0;
  for (std::size_t n = 0; n + 11 < s.samples.size(); ++n)
    period = std::max(period, std::abs(s.samples[n + 11].i3 - s.samples[n].i3));
  for (const auto& x : s.samples)
    level = std::max(level, std::min({std::abs(x.i3), std::abs(x.i3 - 1.0), std::abs(x.i3 + 2.0)}));
  return {period < 1e-8 && level < 1e-8,
          "period defect " + fmt("%.3g", period) + ", distance from {0,1,-2} " + fmt("%.3g", level)};
}

Outcome exponents() {
  const Period tau = Period::half_epsilon_multiple(1);
  const std::vector<Partition> parts{Partition(11, 1), Partition(11, 5)};
  bool pass = true;
  std::ostringstream d;
  auto judge = [&](const std::string& label, const std::vector<TmiSeries>& series) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const int ell = parts[k].ell();
      const double lo = ell == 1 ? 0.1 : 1.1, hi = ell == 1 ? 0.5 : 1.5;
      std::string got;
      try {
        const double b = fit_power_law(series[k]).exponent;
        const bool ok = b >= lo && b <= hi;
        pass = pass && ok;
        got = fmt("%.3f", b) + (ok ? "" : "*");
      } catch (const std::exception& e) {
        pass = false;
        got = "nofit*";
      }
      d << " " << label << " l=" << ell << " b=" << got;
    }
  };
  for (double hx : kFields)
    for (auto init : kInits) judge("floquet/" + case_name(hx, init), tmi_time_series(floquet(11, tau, hx), parts, init, 500));
  for (double hx : kFields)
    for (auto init : kInits) {
      ModelParams p;
      p.num_sites = 11;
      p.h_x = hx;
      judge("tfim/" + case_name(hx, init), tfim_time_series(p, parts, init, TimeGrid{0.1, 500}));
    }
  d << " (* outside [0.1,0.5] for l=1, [1.1,1.5] for l=5)";
  return {pass, d.str().substr(1)};
}

SweepResult ell_sweep() {
  ExperimentSpec spec;
  spec.sizes = {4, 5, 6, 7, 8, 9, 10, 11};
  spec.taus = {Period::half_epsilon_multiple(1)};
  spec.inits = kInits;
  spec.h_x_values = kFields;
  spec.fit = false;
  return run_sweep(spec);
}

Outcome structure() {
  const auto rows = extract_minima(ell_sweep());
  bool pass = true;
  std::ostringstream d;
  for (const auto& r : rows) {
    const bool symmetric = !r.odd || r.mirror_defect <= 1e-6;
    if (r.structure_ok && symmetric) continue;
    pass = false;
    d << " " << case_name(r.h_x, r.init) << " N=" << r.num_sites << " argmin l=" << r.argmin_ell
      << " minimum defect " << fmt("%.3g", r.structure_defect) << " mirror defect " << fmt("%.3g", r.mirror_defect)
      << ";";
  }
  return {pass, pass ? std::to_string(rows.size()) + " (case, N) rows hold"
                     : "failing:" + d.str()};
}

// Shared by criteria 5 and 6: N = 11, ell = 5, tau = k eps/2 for k = 0..16.
const SweepResult& tau_sweep() {
  static const SweepResult result = [] {
    ExperimentSpec spec;
    spec.sizes = {11};
    spec.ells = {5};
    for (int k = 0; k <= 16; ++k) spec.taus.push_back(Period::half_epsilon_multiple(k));
    spec.inits = kInits;
    spec.h_x_values = kFields;
    spec.fit = false;
    return run_sweep(spec);
  }();
  return result;
}

double tau_avg(double hx, InitialStateKind init, int k) {
  RecordKey key;
  key.h_x = hx;
  key.init = init;
  key.num_sites = 11;
  key.tau = Period::half_epsilon_multiple(k);
  key.ell = 5;
  const auto* r = tau_sweep().find(key);
  if (!r || !r->ok()) throw std::runtime_error("missing tau sweep record k=" + std::to_string(k));
  return r->i3_avg;
}

Outcome tau_symmetry() {
  double worst = 0.0;
  for (auto init : kInits)
    for (int k = 0; k <= 16; ++k) worst = std::max(worst, std::abs(tau_avg(0.0, init, k) - tau_avg(0.0, init, 16 - k)));
  return {worst < 1e-6, "max |I(tau) - I(pi/2 - tau)| " + fmt("%.3g", worst)};
}

Outcome ordering() {
  bool pass = true;
  std::ostringstream d;
  for (auto init : kInits) {
    const double a = tau_avg(0.0, init, 1), b = tau_avg(1.0, init, 1);
    const bool ok = b < a;
    pass = pass && ok;
    d << to_string(init) << ": nonint " << fmt("%.4f", b) << (ok ? " < " : " >= ") << "int " << fmt("%.4f", a) << "; ";
  }
  for (double hx : kFields)
    for (auto init : kInits) {
      int best = 0;
      for (int k = 1; k <= 16; ++k)
        if (std::abs(tau_avg(hx, init, k)) > std::abs(tau_avg(hx, init, best))) best = k;
      const bool ok = best == 7 || best == 9;
      pass = pass && ok;
      d << case_name(hx, init) << " argmax|I| at k=" << best << (ok ? "" : "*") << " ("
        << fmt("%.4f", tau_avg(hx, init, best)) << " vs k=8 " << fmt("%.4f", tau_avg(hx, init, 8)) << "); ";
    }
  for (double hx : kFields) {
    const double gap = std::abs(tau_avg(hx, InitialStateKind::AllUp, 8) - tau_avg(hx, InitialStateKind::Neel, 8));
    pass = pass && gap < 1e-8;
    d << (hx == 0.0 ? "int" : "nonint") << " pi/4 init gap " << fmt("%.3g", gap) << "; ";
  }
  d << "(k in eps/2 units, pi/4 is k=8, * = not adjacent)";
  return {pass, d.str()};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> tau_dist(0.0, 1.5707963267948966);
  std::uniform_real_distribution<double> field(0.0, 2.0);
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const int n = draw % 2 ? 4 : 3;
    const double hx = draw % 4 < 2 ? 0.0 : field(rng);
    const auto p = floquet(n, Period::radians(tau_dist(rng)), hx);
    const auto init = kInits[(draw / 2) % 2];
    const Partition part(n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2)));
    const auto fast = tmi_time_series(p, part, init, 12);
    const auto u = build_floquet_dense(p);
    auto state = prepare_encoded_state(init, n);
    auto s_of = [&](SubsetMask m) {
      const auto rho = scramble::testing::brute_force_rho(state, m.indices());
      return scramble::testing::entropy_bits(hermitian_eigenvalues(rho, EigenMethod::Jacobi));
    };
    for (const auto& sample : fast.samples) {
      const auto x = part.x(), y = part.y(), z = part.z();
      const double dense = s_of(x) + s_of(y) + s_of(z) - s_of(x | y) - s_of(y | z) - s_of(z | x) + s_of(x | y | z);
      worst = std::max(worst, std::abs(dense - sample.i3));
      state = apply_chain_unitary(std::move(state), u);
    }
  }
  return {worst < 1e-9, "20 draws x 13 samples, max deviation " + fmt("%.3g", worst)};
}

Outcome tfim_consistency() {
  bool pass = true;
  double energy = 0.0, group = 0.0;
  std::ostringstream d;
  for (double hx : kFields) {
    ModelParams p;
    p.num_sites = 11;
    p.h_x = hx;
    const auto prop = shared_tfim_propagator(p);
    for (auto init : kInits) {
      const auto psi0 = prepare_encoded_state(init, 11);
      const double e0 = tfim_energy(psi0, p);
      for (double t : {1.0, 50.0, 250.0, 500.0})
        energy = std::max(energy, std::abs(tfim_energy(prop->propagate(psi0, t), p) - e0));
      const auto split = prop->propagate(prop->propagate(psi0, 123.4), 376.6);
      const auto whole = prop->propagate(psi0, 500.0);
      group = std::max(group, max_amplitude_difference(split.amplitudes(), whole.amplitudes()));

      const auto series = tfim_time_series(p, Partition(11, 5), init, TimeGrid{0.1, 5000});
      double t0 = 0.0, peak = -1e300;
      std::size_t positive = 0;
      for (const auto& s : series.samples)
        if (s.i3 >= 0.0) {
          t0 = s.time;
          if (s.time > 20.0) {
            ++positive;
            peak = std::max(peak, s.i3);
          }
        }
      const bool ok = t0 < 20.0;
      pass = pass && ok;
      d << case_name(hx, init) << " last I3>=0 at t=" << fmt("%.1f", t0);
      if (!ok) d << "* (" << positive << " samples after t=20, peak " << fmt("%.3f", peak) << ")";
      d << "; ";
    }
  }
  pass = pass && energy < 1e-9 && group < 1e-9;
  d << "energy drift " << fmt("%.3g", energy) << ", group defect " << fmt("%.3g", group);
  return {pass, d.str()};
}

Outcome full_size_run() {
  ExperimentSpec spec;
  spec.sizes = {11};
  spec.taus = {Period::half_epsilon_multiple(1)};
  spec.inits = kInits;
  spec.h_x_values = kFields;
  const auto result = run_sweep(spec);
  std::size_t failed = 0;
  for (const auto& r : result.records) failed += r.ok() ? 0 : 1;
  return {failed == 0 && result.records.size() == 36,
          std::to_string(result.records.size()) + " records, " + std::to_string(failed) + " failed, " +
              std::to_string(default_thread_count()) + " worker(s)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "self-dual entropy table", 5.0, entropy_table_golden},
      {2, "self-dual period-N oscillation", 0.0, periodicity},
      {3, "power-law exponents at tau = eps/2", 120.0, exponents},
      {4, "ell structure of time-averaged I3", 0.0, structure},
      {5, "integrable tau <-> pi/2 - tau symmetry", 0.0, tau_symmetry},
      {6, "ordering claims", 0.0, ordering},
      {7, "fast path vs dense oracle", 0.0, oracle_equivalence},
      {8, "TFIM consistency", 0.0, tfim_consistency},
      {9, "full-size run under 10 minutes", 600.0, full_size_run},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && secs >= c.time_limit) {
      o.pass = false;
      o.detail += "; over the " + fmt("%.0f", c.time_limit) + " s limit";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %d: %s [%.1f s] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
