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

#include "scramble/scrambling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

constexpr double kFormulaTolerance = 1e-9;

double checked(double via_mi, double via_expansion) {
  if (!(std::abs(via_mi - via_expansion) <= kFormulaTolerance))
    throw NumericalError("tripartite information formulas disagree: " + std::to_string(via_mi) +
                         " vs " + std::to_string(via_expansion));
  return via_mi;
}

}  // namespace

std::string_view to_string(InitialStateKind kind) {
  return kind == InitialStateKind::AllUp ? "allup" : "neel";
}

InitialStateKind parse_initial_state(std::string_view text) {
  if (text == "allup" || text == "all-up" || text == "all_up") return InitialStateKind::AllUp;
  if (text == "neel") return InitialStateKind::Neel;
  throw ArgumentError("unknown initial state '" + std::string(text) + "'");
}

Partition::Partition(int num_sites, int ell) : num_sites_(num_sites), ell_(ell) {
  if (num_sites < 3) throw ArgumentError("partition needs N >= 3");
  if (ell < 1 || ell > num_sites - 2)
    throw ArgumentError("subsystem size ell=" + std::to_string(ell) + " outside [1, N-2]");
}

StateVector prepare_product_state(InitialStateKind kind, int num_sites) {
  if (num_sites < 2) throw ArgumentError("encoded state needs N >= 2");
  std::uint64_t chain = 0;
  if (kind == InitialStateKind::Neel)
    for (int k = 1; k < num_sites; k += 2) chain |= std::uint64_t{1} << k;
  std::vector<Amplitude> amps(std::size_t{1} << (num_sites + 1));
  const double r = std::numbers::sqrt2 / 2.0;
  amps[chain] = r;
  amps[chain | (std::uint64_t{1} << num_sites)] = r;
  return StateVector(num_sites, std::move(amps));
}

StateVector prepare_encoded_state(InitialStateKind kind, int num_sites) {
  return apply_cnot(prepare_product_state(kind, num_sites), num_sites, 0);
}

double EntropySet::expanded_tmi() const { return s_x + s_y + s_z - s_xy - s_yz - s_zx + s_xyz; }

double EntropySet::mutual_information_tmi() const {
  const double i2_xy = s_x + s_y - s_xy;
  const double i2_xz = s_x + s_z - s_zx;
  const double i2_x_yz = s_x + s_yz - s_xyz;
  return i2_xy + i2_xz - i2_x_yz;
}

double bipartite_mi(const StateVector& state, SubsetMask a, SubsetMask b, EntropyMethod method) {
  if (!a.disjoint(b)) throw ArgumentError("mutual information masks overlap");
  return subsystem_entropy(state, a, method) + subsystem_entropy(state, b, method) -
         subsystem_entropy(state, a | b, method);
}

double tripartite_mi(const StateVector& state, SubsetMask a, SubsetMask b, SubsetMask c,
                     EntropyMethod method) {
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c))
    throw ArgumentError("tripartite masks overlap");
  EntropySet s;
  s.s_x = subsystem_entropy(state, a, method);
  s.s_y = subsystem_entropy(state, b, method);
  s.s_z = subsystem_entropy(state, c, method);
  s.s_xy = subsystem_entropy(state, a | b, method);
  s.s_yz = subsystem_entropy(state, b | c, method);
  s.s_zx = subsystem_entropy(state, c | a, method);
  s.s_xyz = subsystem_entropy(state, a | b | c, method);
  return TmiEvaluator::checked_tmi(s);
}

double tripartite_mi(const StateVector& state, const Partition& part, EntropyMethod method) {
  if (state.num_sites() != part.num_sites()) throw ArgumentError("partition does not match the state");
  const TmiEvaluator evaluator(part, method);
  return TmiEvaluator::checked_tmi(evaluator.entropies(state));
}

TmiEvaluator::TmiEvaluator(const Partition& part, EntropyMethod method)
    : part_(part), method_(method) {
  masks_ = {part.x(),          part.y(),          part.z(),         part.x() | part.y() | part.z(),
            part.x() | part.y(), part.y() | part.z(), part.z() | part.x()};
  if (method_ == EntropyMethod::Schmidt) {
    const int qubits = part.num_sites() + 1;
    cuts_.reserve(masks_.size());
    for (auto m : masks_) cuts_.emplace_back(qubits, m);
  }
}

double TmiEvaluator::entropy(const StateVector& state, std::size_t slot) const {
  if (method_ == EntropyMethod::Schmidt) return von_neumann_entropy(cuts_[slot].spectrum(state.amplitudes()));
  return subsystem_entropy(state, masks_[slot], EntropyMethod::PartialTrace);
}

EntropySet TmiEvaluator::entropies(const StateVector& state) const {
  if (state.num_sites() != part_.num_sites()) throw ArgumentError("partition does not match the state");
  EntropySet s;
  s.s_x = entropy(state, 0);
  s.s_y = entropy(state, 1);
  s.s_z = entropy(state, 2);
  s.s_xyz = entropy(state, 3);
  s.s_xy = entropy(state, 4);
  s.s_yz = entropy(state, 5);
  s.s_zx = entropy(state, 6);
  return s;
}

double TmiEvaluator::checked_tmi(const EntropySet& s) {
  return checked(s.mutual_information_tmi(), s.expanded_tmi());
}

}  // namespace scramble
