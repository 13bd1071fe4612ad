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

#include "scramble/pauli.hpp"

#include "scramble/errors.hpp"

namespace scramble {

ComplexMatrix pauli_matrix(Pauli p) {
  ComplexMatrix m(2, 2);
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix site_operator(Pauli p, int site, int num_sites) {
  if (num_sites < 1 || num_sites > kDenseMaxSites)
    throw ResourceError("dense operator on " + std::to_string(num_sites) + " sites exceeds budget");
  if (site < 0 || site >= num_sites) throw ArgumentError("site index out of range");
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int k = num_sites - 1; k >= 0; --k) out = kron(out, pauli_matrix(k == site ? p : Pauli::I));
  return out;
}

ComplexMatrix xx_coupling(int num_sites) {
  const std::size_t dim = std::size_t{1} << num_sites;
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < num_sites; ++i) {
    const auto bond = multiply(site_operator(Pauli::X, i, num_sites),
                               site_operator(Pauli::X, (i + 1) % num_sites, num_sites));
    for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] += bond.data()[k];
  }
  return out;
}

ComplexMatrix field(Pauli p, int num_sites) {
  const std::size_t dim = std::size_t{1} << num_sites;
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < num_sites; ++i) {
    const auto term = site_operator(p, i, num_sites);
    for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] += term.data()[k];
  }
  return out;
}

}  // namespace scramble
