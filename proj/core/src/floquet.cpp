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

#include "scramble/floquet.hpp"

#include <bit>
#include <cmath>

#include "scramble/eigen.hpp"
#include "scramble/errors.hpp"
#include "scramble/pauli.hpp"

namespace scramble {

namespace {

// Sum of z-eigenvalues (+1 for bit 0) over the chain.
int field_sum(std::uint32_t index, int n) { return n - 2 * std::popcount(index); }

// Sum over periodic bonds of z_i z_{i+1}.
int bond_sum(std::uint32_t index, int n) {
  const std::uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1u);
  const std::uint32_t rotated = ((index >> 1) | (index << (n - 1))) & all;
  return n - 2 * std::popcount((index ^ rotated) & all);
}

void unnormalized_walsh(Amplitude* a, std::size_t dim) {
  for (std::size_t half = 1; half < dim; half <<= 1)
    for (std::size_t i = 0; i < dim; i += 2 * half)
      for (std::size_t j = i; j < i + half; ++j) {
        const Amplitude x = a[j];
        const Amplitude y = a[j + half];
        a[j] = x + y;
        a[j + half] = x - y;
      }
}

}  // namespace

FloquetPropagator::FloquetPropagator(const ModelParams& params) : params_(params) {
  params_.validate();
  const int n = params_.num_sites;
  if (n > StateVector::kMaxSites) throw ResourceError("chain too long for a state vector");
  const std::size_t dim = std::size_t{1} << n;
  const double tau = params_.tau.value();
  const double scale = 1.0 / static_cast<double>(dim);
  kick_phase_.resize(dim);
  coupling_phase_.resize(dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    const int f = field_sum(i, n);
    kick_phase_[i] = std::polar(1.0, -tau * params_.h_z * f);
    const double coupling = params_.J * bond_sum(i, n) + params_.h_x * f;
    coupling_phase_[i] = std::polar(scale, -tau * coupling);
  }
}

void FloquetPropagator::apply_in_place(std::span<Amplitude> amplitudes) const {
  const std::size_t dim = kick_phase_.size();
  if (amplitudes.size() != 2 * dim) throw ArgumentError("state does not match the chain length");
  for (std::size_t block = 0; block < amplitudes.size(); block += dim) {
    Amplitude* a = amplitudes.data() + block;
    for (std::size_t i = 0; i < dim; ++i) a[i] *= kick_phase_[i];
    // Unnormalized transforms; the 2^-N lives in coupling_phase_.
    unnormalized_walsh(a, dim);
    for (std::size_t i = 0; i < dim; ++i) a[i] *= coupling_phase_[i];
    unnormalized_walsh(a, dim);
  }
}

StateVector FloquetPropagator::apply(StateVector state) const {
  if (state.num_sites() != params_.num_sites) throw ArgumentError("state does not match the chain length");
  apply_in_place(state.mutable_amplitudes());
  return state;
}

StateVector apply_floquet_kick(StateVector state, const ModelParams& params) {
  return FloquetPropagator(params).apply(std::move(state));
}

ComplexMatrix hermitian_exponential(const ComplexMatrix& h, double t) {
  const auto eig = hermitian_eigendecomposition(h);
  const std::size_t n = h.rows();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t c = 0; c < n; ++c) {
    const Complex phase = std::polar(1.0, -t * eig.values[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= phase;
  }
  return multiply(scaled, adjoint(eig.vectors));
}

ComplexMatrix build_floquet_dense(const ModelParams& params) {
  params.validate();
  const int n = params.num_sites;
  if (n > kDenseFloquetMaxSites)
    throw ResourceError("dense Floquet unitary limited to N <= " + std::to_string(kDenseFloquetMaxSites));
  const double tau = params.tau.value();
  ComplexMatrix coupling = xx_coupling(n);
  const ComplexMatrix hx = field(Pauli::X, n);
  for (std::size_t k = 0; k < coupling.data().size(); ++k)
    coupling.data()[k] = params.J * coupling.data()[k] + params.h_x * hx.data()[k];
  ComplexMatrix kick = field(Pauli::Z, n);
  for (auto& z : kick.data()) z *= params.h_z;
  return multiply(hermitian_exponential(coupling, tau), hermitian_exponential(kick, tau));
}

StateVector apply_chain_unitary(StateVector state, const ComplexMatrix& u) {
  const std::size_t dim = std::size_t{1} << state.num_sites();
  if (u.rows() != dim || u.cols() != dim) throw ArgumentError("operator does not match the chain length");
  auto amps = state.mutable_amplitudes();
  for (std::size_t block = 0; block < amps.size(); block += dim) {
    const auto out = multiply(u, std::span<const Amplitude>(amps.data() + block, dim));
    std::copy(out.begin(), out.end(), amps.begin() + static_cast<std::ptrdiff_t>(block));
  }
  return state;
}

}  // namespace scramble
