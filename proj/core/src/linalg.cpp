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

#include "scramble/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

template <typename T>
Matrix<T> multiply_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw ArgumentError("matrix product: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

}  // namespace

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  std::copy(m.data().begin(), m.data().end(), out.data().begin());
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply_impl(a, b); }
RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) { return multiply_impl(a, b); }

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw ArgumentError("matrix-vector product: dimension mismatch");
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc{};
    auto r = m.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) acc += r[j] * v[j];
    out[i] = acc;
  }
  return out;
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const auto& z : m.data()) best = std::max(best, std::abs(z));
  return best;
}

double max_abs(const RealMatrix& m) {
  double best = 0.0;
  for (double x : m.data()) best = std::max(best, std::abs(x));
  return best;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ArgumentError("shape mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    best = std::max(best, std::abs(a.data()[i] - b.data()[i]));
  return best;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.square()) throw ArgumentError("hermiticity check needs a square matrix");
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
  return best;
}

double unitarity_defect(const ComplexMatrix& u) {
  const auto prod = multiply(adjoint(u), u);
  return max_abs_difference(prod, ComplexMatrix::identity(u.rows()));
}

Complex trace(const ComplexMatrix& m) {
  Complex acc{};
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) acc += m(i, i);
  return acc;
}

}  // namespace scramble
