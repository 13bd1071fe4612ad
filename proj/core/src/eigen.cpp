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

#include "scramble/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

inline double conj_of(double x) { return x; }
inline Complex conj_of(Complex z) { return std::conj(z); }
inline double abs2(double x) { return x * x; }
inline double abs2(Complex z) { return std::norm(z); }
inline double real_of(double x) { return x; }
inline double real_of(Complex z) { return z.real(); }

constexpr int kMaxJacobiSweeps = 100;
// Total QL sweeps allowed per eigenvalue, summed over the whole matrix.
constexpr int kQlIterationsPerValue = 30;

template <typename T>
void check_input(const Matrix<T>& m) {
  if (!m.square()) throw ArgumentError("eigendecomposition needs a square matrix");
  if (m.rows() > kEigenMaxDimension)
    throw ResourceError("eigendecomposition dimension " + std::to_string(m.rows()) +
                        " exceeds budget " + std::to_string(kEigenMaxDimension));
  double scale = 0.0;
  for (const auto& x : m.data()) scale = std::max(scale, std::abs(x));
  const double tol = 1e-8 * std::max(1.0, scale);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - conj_of(m(j, i))) > tol)
        throw ArgumentError("matrix is not Hermitian within 1e-8");
}

template <typename T>
Matrix<T> symmetrized(const Matrix<T>& m) {
  Matrix<T> a = m;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    a(i, i) = T{real_of(m(i, i))};
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const T avg = 0.5 * (m(i, j) + conj_of(m(j, i)));
      a(i, j) = avg;
      a(j, i) = conj_of(avg);
    }
  }
  return a;
}

// Householder reduction to a real symmetric tridiagonal matrix.
// On return `basis_t` (if requested) holds the reducing unitary transposed:
// row i is the i-th column of Q*D, where D removes the phases of the
// complex off-diagonal.
template <typename T>
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[k] couples k and k+1; off[n-1] == 0
  Matrix<T> basis_t;
};

template <typename T>
Tridiagonal<T> tridiagonalize(Matrix<T> a, bool want_vectors) {
  const std::size_t n = a.rows();
  Matrix<T> q;
  if (want_vectors) q = Matrix<T>::identity(n);
  std::vector<T> v(n), p(n), w(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += abs2(a(i, k));
    const double tail2 = xnorm2 - abs2(a(k + 1, k));
    if (tail2 <= std::numeric_limits<double>::min()) continue;

    const double xnorm = std::sqrt(xnorm2);
    const T x0 = a(k + 1, k);
    const double ax0 = std::abs(x0);
    const T phase = ax0 > 0.0 ? x0 / ax0 : T{1};
    const T alpha = -phase * xnorm;

    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += abs2(v[i]);
    }
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] *= inv;

    double kappa = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      T acc{};
      auto row = a.row(i);
      for (std::size_t j = k + 1; j < n; ++j) acc += row[j] * v[j];
      p[i] = acc;
      kappa += real_of(conj_of(v[i]) * acc);
    }
    for (std::size_t i = k + 1; i < n; ++i) w[i] = 2.0 * p[i] - 2.0 * kappa * v[i];

    // A <- H A H = A - v w^dagger - w v^dagger on the trailing block.
    for (std::size_t i = k + 1; i < n; ++i) {
      auto row = a.row(i);
      const T vi = v[i];
      const T wi = w[i];
      for (std::size_t j = k + 1; j < n; ++j) row[j] -= vi * conj_of(w[j]) + wi * conj_of(v[j]);
    }
    a(k + 1, k) = alpha;
    a(k, k + 1) = conj_of(alpha);
    for (std::size_t i = k + 2; i < n; ++i) {
      a(i, k) = T{};
      a(k, i) = T{};
    }

    if (want_vectors) {
      // Q <- Q H
      for (std::size_t r = 0; r < n; ++r) {
        auto row = q.row(r);
        T s{};
        for (std::size_t j = k + 1; j < n; ++j) s += row[j] * v[j];
        s *= 2.0;
        for (std::size_t j = k + 1; j < n; ++j) row[j] -= s * conj_of(v[j]);
      }
    }
  }

  Tridiagonal<T> out;
  out.diag.resize(n);
  out.off.assign(n, 0.0);
  std::vector<T> d(n, T{1});
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = real_of(a(i, i));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const T e = a(k + 1, k);
    const double ae = std::abs(e);
    out.off[k] = ae;
    d[k + 1] = ae > 0.0 ? d[k] * (e / ae) : d[k];
  }
  if (want_vectors) {
    out.basis_t = Matrix<T>(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) out.basis_t(i, r) = q(r, i) * d[i];
  }
  return out;
}

// Implicit-shift QL on a symmetric tridiagonal matrix. Rotations are applied to
// the rows of `zt` (eigenvectors stored as rows) when non-null.
template <typename T>
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, Matrix<T>* zt) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  // Zero blocks of a low-rank matrix never satisfy a purely local test.
  double norm = 0.0;
  for (std::ptrdiff_t i = 0; i < n; ++i) norm = std::max(norm, std::abs(d[i]) + std::abs(e[i]));
  const long budget = static_cast<long>(kQlIterationsPerValue) * std::max<std::ptrdiff_t>(n, 1);
  long iter = 0;
  for (std::ptrdiff_t l = 0; l < n; ++l) {
    std::ptrdiff_t m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * std::max(dd, 1e-3 * norm)) break;
      }
      if (m != l) {
        if (iter++ == budget)
          throw NumericalError("tridiagonal QL did not converge within " + std::to_string(budget) +
                               " iterations (stalled at index " + std::to_string(l) + ")");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::ptrdiff_t i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (zt != nullptr) {
            auto lo = zt->row(static_cast<std::size_t>(i));
            auto hi = zt->row(static_cast<std::size_t>(i + 1));
            for (std::size_t k = 0; k < lo.size(); ++k) {
              const T fk = hi[k];
              hi[k] = s * lo[k] + c * fk;
              lo[k] = c * lo[k] - s * fk;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

template <typename T>
EigenSystem<T> sorted_system(std::vector<double> values, Matrix<T> rows) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  EigenSystem<T> out;
  out.values.resize(n);
  out.vectors = Matrix<T>(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = values[order[c]];
    auto src = rows.row(order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = src[r];
  }
  return out;
}

template <typename T>
EigenSystem<T> tridiagonal_eigensystem(const Matrix<T>& m) {
  auto tri = tridiagonalize(symmetrized(m), true);
  tridiagonal_ql(tri.diag, tri.off, &tri.basis_t);
  return sorted_system(std::move(tri.diag), std::move(tri.basis_t));
}

// Cyclic Jacobi for complex Hermitian matrices. Returns eigenvectors as rows.
struct JacobiResult {
  std::vector<double> values;
  ComplexMatrix vectors_t;
};

JacobiResult jacobi(ComplexMatrix a, bool want_vectors) {
  const std::size_t n = a.rows();
  ComplexMatrix v;
  if (want_vectors) v = ComplexMatrix::identity(n);

  double total = 0.0;
  for (const auto& z : a.data()) total += std::norm(z);
  const double floor = std::max(total, std::numeric_limits<double>::min()) * 1e-28;

  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= floor) break;
    if (sweep == kMaxJacobiSweeps)
      throw NumericalError("Jacobi eigensolver did not converge after " +
                           std::to_string(kMaxJacobiSweeps) + " sweeps");

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex phase = apq / mag;  // e^{i phi}
        const double zeta = (aqq - app) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        // Rotation acting on columns p, q: J = D R with D_qq = e^{-i phi}.
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        auto rp = a.row(p);
        auto rq = a.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = rp[k];
          const Complex aqk = rq[k];
          rp[k] = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          rq[k] = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (want_vectors) {
          // V <- V J, stored transposed: rows p, q of V^T.
          auto vp = v.row(p);
          auto vq = v.row(q);
          for (std::size_t k = 0; k < n; ++k) {
            const Complex xp = vp[k];
            const Complex xq = vq[k];
            vp[k] = xp * jpp + xq * jqp;
            vq[k] = xp * jpq + xq * jqq;
          }
        }
      }
    }
  }

  JacobiResult out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
  out.vectors_t = std::move(v);
  return out;
}

}  // namespace

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& m, EigenMethod method) {
  check_input(m);
  if (m.rows() == 0) return {};
  if (method == EigenMethod::Auto)
    method = m.rows() <= kJacobiMaxDimension ? EigenMethod::Jacobi : EigenMethod::Tridiagonal;
  if (method == EigenMethod::Jacobi) {
    auto res = jacobi(symmetrized(m), true);
    return sorted_system(std::move(res.values), std::move(res.vectors_t));
  }
  return tridiagonal_eigensystem(m);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, EigenMethod method) {
  check_input(m);
  if (m.rows() == 0) return {};
  if (method == EigenMethod::Auto)
    method = m.rows() <= kJacobiMaxDimension ? EigenMethod::Jacobi : EigenMethod::Tridiagonal;
  std::vector<double> values;
  if (method == EigenMethod::Jacobi) {
    values = jacobi(symmetrized(m), false).values;
  } else {
    auto tri = tridiagonalize(symmetrized(m), false);
    tridiagonal_ql<Complex>(tri.diag, tri.off, nullptr);
    values = std::move(tri.diag);
  }
  std::sort(values.begin(), values.end());
  return values;
}

SymmetricEigen symmetric_eigendecomposition(const RealMatrix& m) {
  check_input(m);
  if (m.rows() == 0) return {};
  return tridiagonal_eigensystem(m);
}

}  // namespace scramble
