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

#include <cstdint>
#include <span>
#include <vector>

#include "scramble/linalg.hpp"
#include "scramble/state_vector.hpp"

namespace scramble {

/// Reduced density matrix on `subsystem_size` qubits (the kept ones, in
/// ascending qubit order packed into the low bits of the row index).
struct DensityMatrix {
  ComplexMatrix entries;
  int subsystem_size = 0;
};

inline constexpr int kPartialTraceMaxQubits = 10;

/// Entries below this are dropped from the entropy sum.
inline constexpr double kSpectrumClamp = 1e-12;

enum class EntropyMethod {
  Schmidt,       ///< Gram matrix of the reshaped amplitudes on the smaller side.
  PartialTrace,  ///< Explicit index-sum reduced density matrix + Jacobi.
};

/// Precomputed reshaping of a pure state into a matrix with rows indexed by
/// the smaller side of the cut `keep | complement`.
class Bipartition {
 public:
  Bipartition(int num_qubits, SubsetMask keep);

  SubsetMask keep() const { return keep_; }
  std::size_t small_dimension() const { return small_index_.size(); }

  /// Nonzero-capable part of the reduced spectrum, sorted descending. Has
  /// 2^min(|keep|, |complement|) entries; values in [-1e-10, 0) are clamped to 0.
  std::vector<double> spectrum(std::span<const Amplitude> amplitudes) const;

 private:
  int num_qubits_;
  SubsetMask keep_;
  std::vector<std::uint32_t> small_index_;
  std::vector<std::uint32_t> large_index_;
};

/// Eigenvalues of tr_complement |psi><psi| via the Schmidt route.
/// ArgumentError for an empty or full mask.
std::vector<double> schmidt_spectrum(const StateVector& state, SubsetMask keep);

/// Explicit reduced density matrix. ResourceError above 2^10 dimension.
DensityMatrix partial_trace(const StateVector& state, SubsetMask keep);

/// Eigenvalues (descending, clamped) of a density matrix, by Jacobi rotations.
std::vector<double> density_spectrum(const DensityMatrix& rho);

/// -sum p log2 p in bits. NumericalError on entries outside [-1e-10, 1+1e-10].
double von_neumann_entropy(std::span<const double> spectrum);

/// S(keep) in bits; 0 for an empty or full mask.
double subsystem_entropy(const StateVector& state, SubsetMask keep,
                         EntropyMethod method = EntropyMethod::Schmidt);

/// Scatters the low bits of `value` into the positions set in `mask`.
std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask);
/// Gathers the bits of `value` at the positions set in `mask` into the low bits.
std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask);

}  // namespace scramble
