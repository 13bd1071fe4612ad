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

#include <span>
#include <vector>

#include "scramble/linalg.hpp"
#include "scramble/model.hpp"
#include "scramble/state_vector.hpp"

namespace scramble {

inline constexpr int kDenseFloquetMaxSites = 8;

/// One period of the kicked Ising map
///   U = exp(-i tau (J H_xx + h_x H_x)) exp(-i tau h_z H_z)
/// applied without forming a matrix: the h_z kick is diagonal in the
/// computational basis and the coupling + longitudinal part is diagonal after a
/// Hadamard on every chain site. The ancilla (top bit) is a spectator.
class FloquetPropagator {
 public:
  explicit FloquetPropagator(const ModelParams& params);

  const ModelParams& params() const { return params_; }

  StateVector apply(StateVector state) const;
  void apply_in_place(std::span<Amplitude> amplitudes) const;

 private:
  ModelParams params_;
  std::vector<Amplitude> kick_phase_;
  std::vector<Amplitude> coupling_phase_;  // includes the 2^-N of two Walsh transforms
};

/// Single kick through a freshly built FloquetPropagator.
StateVector apply_floquet_kick(StateVector state, const ModelParams& params);

/// exp(-i t H) for Hermitian H via eigendecomposition.
ComplexMatrix hermitian_exponential(const ComplexMatrix& h, double t);

/// Dense 2^N x 2^N Floquet unitary assembled from Kronecker-built Pauli sums.
/// ResourceError for N > 8.
ComplexMatrix build_floquet_dense(const ModelParams& params);

/// Applies a 2^N x 2^N operator to the chain qubits of `state`.
StateVector apply_chain_unitary(StateVector state, const ComplexMatrix& u);

}  // namespace scramble
