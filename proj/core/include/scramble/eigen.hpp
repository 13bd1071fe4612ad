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

#include <vector>

#include "scramble/linalg.hpp"

namespace scramble {

enum class EigenMethod {
  Auto,         ///< Jacobi up to kJacobiMaxDimension, tridiagonal QL above.
  Jacobi,       ///< Cyclic complex Jacobi rotations.
  Tridiagonal,  ///< Householder reduction followed by implicit-shift QL.
};

inline constexpr std::size_t kJacobiMaxDimension = 256;
inline constexpr std::size_t kEigenMaxDimension = std::size_t{1} << 11;

/// Eigenvalues in ascending order; column i of `vectors` belongs to values[i].
template <typename T>
struct EigenSystem {
  std::vector<double> values;
  Matrix<T> vectors;
};

using HermitianEigen = EigenSystem<Complex>;
using SymmetricEigen = EigenSystem<double>;

/// Full eigendecomposition of a Hermitian matrix.
///
/// The input must be Hermitian to 1e-8 (relative to its largest entry);
/// otherwise ArgumentError. Non-convergence raises NumericalError carrying the
/// iteration count. Dimensions above 2^11 raise ResourceError.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& m,
                                            EigenMethod method = EigenMethod::Auto);

/// Eigenvalues only. Skips all eigenvector bookkeeping.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          EigenMethod method = EigenMethod::Tridiagonal);

/// Real symmetric specialisation of the tridiagonal path. Used for the
/// transverse-field Hamiltonian, whose matrix is real in the computational basis.
SymmetricEigen symmetric_eigendecomposition(const RealMatrix& m);

}  // namespace scramble
