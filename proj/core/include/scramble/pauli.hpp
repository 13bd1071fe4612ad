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

#include "scramble/linalg.hpp"

namespace scramble {

enum class Pauli { I, X, Y, Z };

ComplexMatrix pauli_matrix(Pauli p);

/// Pauli `p` on `site` of an N-site chain, built as an explicit Kronecker
/// product with site N-1 as the leftmost factor (site k = bit k).
ComplexMatrix site_operator(Pauli p, int site, int num_sites);

/// sum_i sigma^x_i sigma^x_{i+1}, periodic. For N = 2 both bonds (0,1) and
/// (1,0) are kept, doubling the single physical bond.
ComplexMatrix xx_coupling(int num_sites);

/// sum_i sigma^p_i.
ComplexMatrix field(Pauli p, int num_sites);

inline constexpr int kDenseMaxSites = 11;

}  // namespace scramble
