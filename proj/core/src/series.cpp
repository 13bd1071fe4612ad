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

#include "scramble/series.hpp"

#include <cmath>
#include <string>

#include "scramble/errors.hpp"
#include "scramble/floquet.hpp"
#include "scramble/tfim.hpp"

namespace scramble {

namespace {

void check_parts(const ModelParams& params, std::span<const Partition> parts) {
  if (parts.empty()) throw ArgumentError("no partitions requested");
  for (const auto& p : parts)
    if (p.num_sites() != params.num_sites) throw ArgumentError("partition does not match the chain length");
}

std::vector<TmiSeries> make_series(ModelKind model, const ModelParams& params,
                                   std::span<const Partition> parts, InitialStateKind init,
                                   std::size_t reserve) {
  std::vector<TmiSeries> out;
  out.reserve(parts.size());
  for (const auto& part : parts) {
    TmiSeries s;
    s.model = model;
    s.params = params;
    s.partition = part;
    s.init = init;
    s.samples.reserve(reserve);
    out.push_back(std::move(s));
  }
  return out;
}

void record(std::vector<TmiSeries>& out, const std::vector<TmiEvaluator>& evaluators,
            const StateVector& state, double time) {
  for (std::size_t k = 0; k < evaluators.size(); ++k) {
    TmiSample sample;
    sample.time = time;
    sample.entropies = evaluators[k].entropies(state);
    sample.i3 = TmiEvaluator::checked_tmi(sample.entropies);
    out[k].samples.push_back(sample);
  }
}

std::vector<TmiEvaluator> make_evaluators(std::span<const Partition> parts, EntropyMethod method) {
  std::vector<TmiEvaluator> evaluators;
  evaluators.reserve(parts.size());
  for (const auto& p : parts) evaluators.emplace_back(p, method);
  return evaluators;
}

}  // namespace

std::string_view to_string(ModelKind kind) { return kind == ModelKind::Floquet ? "floquet" : "tfim"; }

ModelKind parse_model_kind(std::string_view text) {
  if (text == "floquet") return ModelKind::Floquet;
  if (text == "tfim") return ModelKind::Tfim;
  throw ArgumentError("unknown model '" + std::string(text) + "'");
}

std::vector<double> TmiSeries::times() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.time);
  return out;
}

std::vector<double> TmiSeries::i3_values() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.i3);
  return out;
}

std::vector<TmiSeries> tmi_time_series(const ModelParams& params, std::span<const Partition> parts,
                                       InitialStateKind init, int kicks, EntropyMethod method) {
  if (kicks < 1) throw ArgumentError("need at least one kick");
  check_parts(params, parts);
  const FloquetPropagator propagator(params);
  const auto evaluators = make_evaluators(parts, method);
  auto out = make_series(ModelKind::Floquet, params, parts, init, static_cast<std::size_t>(kicks) + 1);
  StateVector state = prepare_encoded_state(init, params.num_sites);
  record(out, evaluators, state, 0.0);
  for (int n = 1; n <= kicks; ++n) {
    propagator.apply_in_place(state.mutable_amplitudes());
    record(out, evaluators, state, static_cast<double>(n));
  }
  return out;
}

TmiSeries tmi_time_series(const ModelParams& params, const Partition& part, InitialStateKind init,
                          int kicks, EntropyMethod method) {
  return std::move(tmi_time_series(params, std::span(&part, 1), init, kicks, method).front());
}

std::vector<TmiSeries> tfim_time_series(const ModelParams& params, std::span<const Partition> parts,
                                        InitialStateKind init, const TimeGrid& grid,
                                        EntropyMethod method) {
  if (grid.steps < 1 || !(grid.dt > 0.0)) throw ArgumentError("time grid needs dt > 0 and steps >= 1");
  check_parts(params, parts);
  const auto propagator = shared_tfim_propagator(params);
  const auto evaluators = make_evaluators(parts, method);
  auto out = make_series(ModelKind::Tfim, params, parts, init, grid.steps + 1);
  StateVector state = prepare_encoded_state(init, params.num_sites);
  const auto coeffs = propagator->to_eigenbasis(state.amplitudes());
  for (std::size_t k = 0; k <= grid.steps; ++k) {
    const double t = grid.dt * static_cast<double>(k);
    if (k > 0) propagator->from_eigenbasis(coeffs, t, state.mutable_amplitudes());
    record(out, evaluators, state, t);
  }
  return out;
}

TmiSeries tfim_time_series(const ModelParams& params, const Partition& part, InitialStateKind init,
                           const TimeGrid& grid, EntropyMethod method) {
  return std::move(tfim_time_series(params, std::span(&part, 1), init, grid, method).front());
}

double averaged_tmi(const TmiSeries& series, int t1, int t2) {
  if (t2 <= t1) throw ArgumentError("averaging window needs T2 > T1");
  if (t1 < 0) throw ArgumentError("averaging window starts before n = 0");
  const auto& s = series.samples;
  double sum = 0.0;
  int expected = t1;
  for (const auto& sample : s) {
    if (sample.time < t1 || sample.time > t2) continue;
    if (sample.time != static_cast<double>(expected))
      throw ArgumentError("series is missing kick " + std::to_string(expected));
    sum += sample.i3;
    ++expected;
  }
  if (expected != t2 + 1)
    throw ArgumentError("series does not cover kicks " + std::to_string(t1) + ".." + std::to_string(t2));
  return sum / static_cast<double>(t2 - t1 + 1);
}

double averaged_tmi_continuous(const TmiSeries& series, double t1, double t2) {
  if (!(t2 > t1)) throw ArgumentError("averaging window needs T2 > T1");
  const auto& s = series.samples;
  if (s.size() < 2) throw ArgumentError("series too short for integration");
  const double dt = s[1].time - s[0].time;
  if (!(dt > 0.0)) throw ArgumentError("series times must increase");
  const double tol = 1e-9 * std::max(1.0, std::abs(s.back().time));
  for (std::size_t k = 1; k < s.size(); ++k)
    if (std::abs((s[k].time - s[k - 1].time) - dt) > tol) throw ArgumentError("non-uniform time grid");

  const auto index_of = [&](double t) -> std::size_t {
    const double pos = (t - s[0].time) / dt;
    const double rounded = std::round(pos);
    if (std::abs(pos - rounded) > 1e-6 || rounded < 0 || rounded >= static_cast<double>(s.size()))
      throw ArgumentError("averaging bound " + std::to_string(t) + " is not a grid point of the series");
    return static_cast<std::size_t>(rounded);
  };
  const std::size_t a = index_of(t1);
  const std::size_t b = index_of(t2);
  double integral = 0.0;
  for (std::size_t k = a; k < b; ++k) integral += 0.5 * (s[k].i3 + s[k + 1].i3) * dt;
  return integral / (s[b].time - s[a].time);
}


std::vector<TmiSample> entropy_table(const ModelParams& params, const Partition& part,
                                     InitialStateKind init, int kicks) {
  return tmi_time_series(params, part, init, kicks).samples;
}

}  // namespace scramble
