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

#include "scramble/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scramble/errors.hpp"

namespace scramble {

SubsetMask SubsetMask::of(std::initializer_list<int> qubits) {
  std::uint32_t bits = 0;
  for (int q : qubits) {
    if (q < 0 || q >= 32) throw ArgumentError("qubit index out of range: " + std::to_string(q));
    bits |= 1u << q;
  }
  return SubsetMask(bits);
}

SubsetMask SubsetMask::range(int first, int last) {
  if (first < 0 || last > 32 || first > last) throw ArgumentError("invalid qubit range");
  std::uint32_t bits = 0;
  for (int q = first; q < last; ++q) bits |= 1u << q;
  return SubsetMask(bits);
}

SubsetMask SubsetMask::complement(int num_qubits) const {
  const std::uint32_t all = num_qubits >= 32 ? ~0u : ((1u << num_qubits) - 1u);
  return SubsetMask(all & ~bits_);
}

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  for (int q = 0; q < 32; ++q)
    if (contains(q)) out.push_back(q);
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int q : indices()) {
    if (!first) out += ",";
    out += std::to_string(q);
    first = false;
  }
  return out + "}";
}

StateVector::StateVector(int num_sites, std::vector<Amplitude> amplitudes)
    : num_sites_(num_sites), amplitudes_(std::move(amplitudes)) {
  if (num_sites < 1 || num_sites > kMaxSites)
    throw ArgumentError("num_sites must lie in [1, " + std::to_string(kMaxSites) + "]");
  if (amplitudes_.size() != (std::size_t{1} << (num_sites + 1)))
    throw ArgumentError("state vector length must be 2^(N+1)");
  if (std::abs(norm() - 1.0) > 1e-10) throw ArgumentError("state vector is not normalized");
}

StateVector StateVector::basis_state(int num_sites, std::uint64_t index) {
  if (num_sites < 1 || num_sites > kMaxSites) throw ArgumentError("num_sites out of range");
  std::vector<Amplitude> amps(std::size_t{1} << (num_sites + 1));
  if (index >= amps.size()) throw ArgumentError("basis index out of range");
  amps[index] = 1.0;
  return StateVector(num_sites, std::move(amps));
}

StateVector StateVector::normalized(int num_sites, std::vector<Amplitude> amplitudes) {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  if (sum <= 0.0) throw ArgumentError("cannot normalize a zero vector");
  const double inv = 1.0 / std::sqrt(sum);
  for (auto& a : amplitudes) a *= inv;
  return StateVector(num_sites, std::move(amplitudes));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector apply_cnot(StateVector state, int control, int target) {
  const int n = state.num_qubits();
  if (control < 0 || control >= n || target < 0 || target >= n)
    throw ArgumentError("CNOT qubit index out of range");
  if (control == target) throw ArgumentError("CNOT control and target must differ");
  auto amps = state.mutable_amplitudes();
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
  return state;
}

StateVector apply_hadamard_all(StateVector state, SubsetMask sites) {
  if (!sites.subset_of(state.all_mask())) throw ArgumentError("Hadamard mask out of range");
  auto amps = state.mutable_amplitudes();
  const double r = std::numbers::sqrt2 / 2.0;
  for (int q : sites.indices()) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (i & bit) continue;
      const Amplitude a0 = amps[i];
      const Amplitude a1 = amps[i | bit];
      amps[i] = r * (a0 + a1);
      amps[i | bit] = r * (a0 - a1);
    }
  }
  return state;
}

void walsh_hadamard_blocks(std::span<Amplitude> amplitudes, int num_bits) {
  const std::size_t block = std::size_t{1} << num_bits;
  if (amplitudes.size() % block != 0) throw ArgumentError("amplitude count not a multiple of block");
  for (std::size_t base = 0; base < amplitudes.size(); base += block) {
    Amplitude* a = amplitudes.data() + base;
    for (std::size_t half = 1; half < block; half <<= 1) {
      for (std::size_t i = 0; i < block; i += 2 * half) {
        for (std::size_t j = i; j < i + half; ++j) {
          const Amplitude x = a[j];
          const Amplitude y = a[j + half];
          a[j] = x + y;
          a[j + half] = x - y;
        }
      }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(block));
    for (std::size_t i = 0; i < block; ++i) a[i] *= scale;
  }
}

double max_amplitude_difference(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  if (a.size() != b.size()) throw ArgumentError("amplitude arrays differ in length");
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

}  // namespace scramble
