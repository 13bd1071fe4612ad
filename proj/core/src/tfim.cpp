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

#include "scramble/tfim.hpp"

#include <bit>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <tuple>

#include "scramble/eigen.hpp"
#include "scramble/errors.hpp"

namespace scramble {

namespace {

void check_size(const ModelParams& params) {
  params.validate();
  if (params.num_sites > kTfimMaxSites)
    throw ResourceError("TFIM Hamiltonian limited to N <= " + std::to_string(kTfimMaxSites));
}

}  // namespace

RealMatrix build_tfim_hamiltonian(const ModelParams& params) {
  check_size(params);
  const int n = params.num_sites;
  const std::uint32_t dim = 1u << n;
  RealMatrix h(dim, dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    h(i, i) += params.h_z * (n - 2 * std::popcount(i));
    for (int k = 0; k < n; ++k) {
      const std::uint32_t site = 1u << k;
      const std::uint32_t next = 1u << ((k + 1) % n);
      h(i ^ site ^ next, i) += params.J;
      h(i ^ site, i) += params.h_x;
    }
  }
  return h;
}

double tfim_energy(const StateVector& state, const ModelParams& params) {
  check_size(params);
  if (state.num_sites() != params.num_sites) throw ArgumentError("state does not match the chain length");
  const int n = params.num_sites;
  auto amps = state.amplitudes();
  double energy = 0.0;
  for (std::uint32_t i = 0; i < amps.size(); ++i) {
    const std::uint32_t chain = i & ((1u << n) - 1u);
    Complex h_psi = params.h_z * (n - 2 * std::popcount(chain)) * amps[i];
    for (int k = 0; k < n; ++k) {
      const std::uint32_t site = 1u << k;
      const std::uint32_t next = 1u << ((k + 1) % n);
      h_psi += params.J * amps[i ^ site ^ next] + params.h_x * amps[i ^ site];
    }
    energy += (std::conj(amps[i]) * h_psi).real();
  }
  return energy;
}

TfimPropagator::TfimPropagator(const ModelParams& params) : params_(params) {
  auto eig = symmetric_eigendecomposition(build_tfim_hamiltonian(params));
  energies_ = std::move(eig.values);
  const std::size_t dim = energies_.size();
  vectors_t_ = RealMatrix(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) vectors_t_(c, r) = eig.vectors(r, c);
  ready_ = true;
}

void TfimPropagator::require_ready() const {
  if (!ready_) throw InternalError("TFIM propagator used without a cached eigendecomposition");
}

std::vector<Complex> TfimPropagator::to_eigenbasis(std::span<const Amplitude> amplitudes) const {
  require_ready();
  const std::size_t dim = energies_.size();
  if (amplitudes.size() % dim != 0) throw ArgumentError("state does not match the chain length");
  std::vector<Complex> coeffs(amplitudes.size());
  for (std::size_t block = 0; block < amplitudes.size(); block += dim) {
    const Amplitude* psi = amplitudes.data() + block;
    for (std::size_t i = 0; i < dim; ++i) {
      auto v = vectors_t_.row(i);
      double re = 0.0, im = 0.0;
      for (std::size_t r = 0; r < dim; ++r) {
        re += v[r] * psi[r].real();
        im += v[r] * psi[r].imag();
      }
      coeffs[block + i] = Complex(re, im);
    }
  }
  return coeffs;
}

void TfimPropagator::from_eigenbasis(std::span<const Complex> coeffs, double t,
                                     std::span<Amplitude> out) const {
  require_ready();
  const std::size_t dim = energies_.size();
  if (coeffs.size() != out.size() || out.size() % dim != 0)
    throw ArgumentError("coefficient and output sizes disagree");
  const std::size_t blocks = out.size() / dim;
  // Accumulate into split real/imag buffers so the inner loop is a plain axpy.
  std::vector<double> re(out.size(), 0.0), im(out.size(), 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    const Complex phase = std::polar(1.0, -energies_[i] * t);
    auto v = vectors_t_.row(i);
    for (std::size_t b = 0; b < blocks; ++b) {
      const Complex a = phase * coeffs[b * dim + i];
      if (a == Complex{}) continue;
      const double ar = a.real();
      const double ai = a.imag();
      double* dr = re.data() + b * dim;
      double* di = im.data() + b * dim;
      for (std::size_t r = 0; r < dim; ++r) {
        dr[r] += ar * v[r];
        di[r] += ai * v[r];
      }
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = Amplitude(re[k], im[k]);
}

StateVector TfimPropagator::propagate(StateVector state, double t) const {
  require_ready();
  if (state.num_sites() != params_.num_sites) throw ArgumentError("state does not match the chain length");
  const auto coeffs = to_eigenbasis(state.amplitudes());
  from_eigenbasis(coeffs, t, state.mutable_amplitudes());
  return state;
}

std::shared_ptr<const TfimPropagator> shared_tfim_propagator(const ModelParams& params) {
  using Key = std::tuple<int, double, double, double>;
  using Entry = std::shared_future<std::shared_ptr<const TfimPropagator>>;
  static std::mutex mutex;
  static std::map<Key, Entry> cache;

  const Key key{params.num_sites, params.J, params.h_x, params.h_z};
  std::promise<std::shared_ptr<const TfimPropagator>> promise;
  Entry entry;
  bool owner = false;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
      entry = promise.get_future().share();
      cache.emplace(key, entry);
      owner = true;
    } else {
      entry = it->second;
    }
  }
  if (owner) {
    try {
      ModelParams canonical = params;
      canonical.tau = Period{};
      promise.set_value(std::make_shared<const TfimPropagator>(canonical));
    } catch (...) {
      {
        std::lock_guard lock(mutex);
        cache.erase(key);
      }
      promise.set_exception(std::current_exception());
    }
  }
  return entry.get();
}

StateVector tfim_propagate(StateVector state, const ModelParams& params, double t) {
  return shared_tfim_propagator(params)->propagate(std::move(state), t);
}

}  // namespace scramble
