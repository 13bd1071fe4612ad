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

#include "scramble/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "scramble/eigen.hpp"
#include "scramble/errors.hpp"

namespace scramble {

namespace {

void clamp_spectrum(std::vector<double>& values) {
  for (double& v : values)
    if (v < 0.0 && v >= -1e-10) v = 0.0;
  std::sort(values.begin(), values.end(), std::greater<>());
}

void check_mask(int num_qubits, SubsetMask keep) {
  const SubsetMask all = SubsetMask::range(0, num_qubits);
  if (!keep.subset_of(all)) throw ArgumentError("mask " + keep.to_string() + " out of range");
  if (keep.empty()) throw ArgumentError("empty subsystem mask");
  if (keep == all) throw ArgumentError("subsystem mask covers the whole system");
}

}  // namespace

std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint32_t lowest = mask & (~mask + 1u);
    if (value & bit) out |= lowest;
    mask &= mask - 1u;
  }
  return out;
}

std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  std::uint32_t bit = 1;
  for (; mask != 0; mask &= mask - 1u, bit <<= 1) {
    const std::uint32_t lowest = mask & (~mask + 1u);
    if (value & lowest) out |= bit;
  }
  return out;
}

Bipartition::Bipartition(int num_qubits, SubsetMask keep) : num_qubits_(num_qubits), keep_(keep) {
  check_mask(num_qubits, keep);
  const SubsetMask rest = keep.complement(num_qubits);
  const SubsetMask small = keep.count() <= rest.count() ? keep : rest;
  const SubsetMask large = small == keep ? rest : keep;
  small_index_.resize(std::size_t{1} << small.count());
  large_index_.resize(std::size_t{1} << large.count());
  for (std::uint32_t a = 0; a < small_index_.size(); ++a) small_index_[a] = deposit_bits(a, small.bits());
  for (std::uint32_t b = 0; b < large_index_.size(); ++b) large_index_[b] = deposit_bits(b, large.bits());
}

std::vector<double> Bipartition::spectrum(std::span<const Amplitude> amplitudes) const {
  if (amplitudes.size() != (std::size_t{1} << num_qubits_))
    throw ArgumentError("amplitude count does not match bipartition");
  const std::size_t ds = small_index_.size();
  const std::size_t dl = large_index_.size();

  ComplexMatrix m(ds, dl);
  for (std::size_t a = 0; a < ds; ++a) {
    auto row = m.row(a);
    const std::uint32_t base = small_index_[a];
    for (std::size_t b = 0; b < dl; ++b) row[b] = amplitudes[base | large_index_[b]];
  }

  ComplexMatrix gram(ds, ds);
  for (std::size_t i = 0; i < ds; ++i) {
    auto ri = m.row(i);
    for (std::size_t j = 0; j <= i; ++j) {
      auto rj = m.row(j);
      double re = 0.0, im = 0.0;
      for (std::size_t b = 0; b < dl; ++b) {
        // ri[b] * conj(rj[b])
        re += ri[b].real() * rj[b].real() + ri[b].imag() * rj[b].imag();
        im += ri[b].imag() * rj[b].real() - ri[b].real() * rj[b].imag();
      }
      gram(i, j) = Complex(re, im);
      gram(j, i) = Complex(re, -im);
    }
  }

  std::vector<double> values;
  if (ds == 1) {
    values = {gram(0, 0).real()};
  } else if (ds == 2) {
    const double a = gram(0, 0).real();
    const double d = gram(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(gram(0, 1)));
    values = {mean + radius, mean - radius};
  } else {
    values = hermitian_eigenvalues(gram, EigenMethod::Tridiagonal);
  }
  clamp_spectrum(values);
  return values;
}

std::vector<double> schmidt_spectrum(const StateVector& state, SubsetMask keep) {
  return Bipartition(state.num_qubits(), keep).spectrum(state.amplitudes());
}

DensityMatrix partial_trace(const StateVector& state, SubsetMask keep) {
  const int n = state.num_qubits();
  if (!keep.subset_of(state.all_mask())) throw ArgumentError("mask out of range");
  if (keep.count() > kPartialTraceMaxQubits)
    throw ResourceError("partial trace on " + std::to_string(keep.count()) +
                        " qubits exceeds the 2^" + std::to_string(kPartialTraceMaxQubits) +
                        " dimension budget");
  const std::uint32_t kbits = keep.bits();
  const std::size_t dk = std::size_t{1} << keep.count();
  DensityMatrix rho{ComplexMatrix(dk, dk), keep.count()};
  auto amps = state.amplitudes();
  const std::uint32_t total = std::uint32_t{1} << n;
  // rho[a][a'] = sum over full indices i with kept bits a, j = i with kept bits a'.
  for (std::uint32_t i = 0; i < total; ++i) {
    if (amps[i] == Amplitude{}) continue;
    const std::uint32_t a = extract_bits(i, kbits);
    const std::uint32_t env = i & ~kbits;
    for (std::uint32_t ap = 0; ap < dk; ++ap) {
      const std::uint32_t j = env | deposit_bits(ap, kbits);
      rho.entries(a, ap) += amps[i] * std::conj(amps[j]);
    }
  }
  return rho;
}

std::vector<double> density_spectrum(const DensityMatrix& rho) {
  auto values = hermitian_eigenvalues(rho.entries, EigenMethod::Jacobi);
  clamp_spectrum(values);
  return values;
}

double von_neumann_entropy(std::span<const double> spectrum) {
  double s = 0.0;
  for (double p : spectrum) {
    if (p < -1e-10 || p > 1.0 + 1e-10)
      throw NumericalError("spectrum entry " + std::to_string(p) + " outside [0, 1]");
    if (p < kSpectrumClamp) continue;
    s -= p * std::log2(p);
  }
  return std::max(s, 0.0);
}

double subsystem_entropy(const StateVector& state, SubsetMask keep, EntropyMethod method) {
  if (keep.empty() || keep == state.all_mask()) return 0.0;
  if (method == EntropyMethod::Schmidt) return von_neumann_entropy(schmidt_spectrum(state, keep));
  // Trace out the larger side so the explicit matrix stays small.
  const SubsetMask rest = keep.complement(state.num_qubits());
  const SubsetMask side = keep.count() <= rest.count() ? keep : rest;
  return von_neumann_entropy(density_spectrum(partial_trace(state, side)));
}

}  // namespace scramble
