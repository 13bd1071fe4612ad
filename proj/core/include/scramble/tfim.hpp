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

#include <memory>
#include <span>
#include <vector>

#include "scramble/linalg.hpp"
#include "scramble/model.hpp"
#include "scramble/state_vector.hpp"

namespace scramble {

inline constexpr int kTfimMaxSites = 11;

/// H = J H_xx + h_x H_x + h_z H_z on the periodic chain, assembled directly
/// from bit flips. Real symmetric in the computational basis. The tau field of
/// `params` is ignored. ResourceError for N > 11.
RealMatrix build_tfim_hamiltonian(const ModelParams& params);

/// <psi| H (x) 1_W |psi>, applying H term by term without a dense matrix.
double tfim_energy(const StateVector& state, const ModelParams& params);

/// exp(-i H t) from a cached eigendecomposition of H.
class TfimPropagator {
 public:
  /// Empty propagator; propagate() throws InternalError.
  TfimPropagator() = default;
  explicit TfimPropagator(const ModelParams& params);

  bool ready() const { return ready_; }
  const ModelParams& params() const { return params_; }
  std::span<const double> energies() const { return energies_; }

  StateVector propagate(StateVector state, double t) const;

  /// Eigenbasis coefficients of each ancilla block, concatenated.
  std::vector<Complex> to_eigenbasis(std::span<const Amplitude> amplitudes) const;
  /// Writes exp(-i H t) applied to the state with eigenbasis coefficients `coeffs`.
  void from_eigenbasis(std::span<const Complex> coeffs, double t, std::span<Amplitude> out) const;

 private:
  void require_ready() const;

  ModelParams params_;
  std::vector<double> energies_;
  RealMatrix vectors_t_;  // row i is the eigenvector of energies_[i]
  bool ready_ = false;
};

/// Process-wide cache keyed by (N, J, h_x, h_z); each decomposition is
/// computed once even under concurrent requests.
std::shared_ptr<const TfimPropagator> shared_tfim_propagator(const ModelParams& params);

StateVector tfim_propagate(StateVector state, const ModelParams& params, double t);

}  // namespace scramble
