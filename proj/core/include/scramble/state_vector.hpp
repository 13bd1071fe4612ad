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

#include <bit>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace scramble {

using Amplitude = std::complex<double>;

/// Set of qubit indices. Bit k is qubit k; the ancilla of an N-site state is bit N.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> qubits);
  /// Qubits first .. last-1.
  static SubsetMask range(int first, int last);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int qubit) const { return (bits_ >> qubit) & 1u; }
  constexpr bool disjoint(SubsetMask other) const { return (bits_ & other.bits_) == 0; }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }

  /// Complement within qubits 0 .. num_qubits-1.
  SubsetMask complement(int num_qubits) const;
  std::vector<int> indices() const;
  std::string to_string() const;

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr bool operator==(const SubsetMask&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Pure state of an N-site chain plus one ancilla qubit W (bit N).
///
/// Amplitude index bit k is the state of qubit k, with |up> = 0 and |down> = 1.
/// The constructor enforces length 2^(N+1) and unit norm to 1e-10.
class StateVector {
 public:
  static constexpr int kMaxSites = 20;

  StateVector(int num_sites, std::vector<Amplitude> amplitudes);

  static StateVector basis_state(int num_sites, std::uint64_t index);
  /// Normalizes `amplitudes` before construction.
  static StateVector normalized(int num_sites, std::vector<Amplitude> amplitudes);

  int num_sites() const { return num_sites_; }
  int num_qubits() const { return num_sites_ + 1; }
  int ancilla() const { return num_sites_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  SubsetMask chain_mask() const { return SubsetMask::range(0, num_sites_); }
  SubsetMask all_mask() const { return SubsetMask::range(0, num_sites_ + 1); }

  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

  /// Raw access for unitary kernels; callers must preserve the norm.
  std::span<Amplitude> mutable_amplitudes() { return amplitudes_; }

  double norm() const;

 private:
  int num_sites_;
  std::vector<Amplitude> amplitudes_;
};

/// Flips `target` on every basis state whose `control` bit is 1 (|down>).
StateVector apply_cnot(StateVector state, int control, int target);

/// Hadamard on every qubit in `sites`.
StateVector apply_hadamard_all(StateVector state, SubsetMask sites);

/// In-place normalized Walsh-Hadamard transform over the low `num_bits` bits of
/// each contiguous block of 2^num_bits amplitudes.
void walsh_hadamard_blocks(std::span<Amplitude> amplitudes, int num_bits);

/// Max |a_i - b_i| over two equally sized amplitude arrays.
double max_amplitude_difference(std::span<const Amplitude> a, std::span<const Amplitude> b);

}  // namespace scramble
