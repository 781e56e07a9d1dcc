// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_LINALG_FLOAT_HPP
#define FFC_LINALG_FLOAT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ffc/errors.hpp"
#include "ffc/matrix.hpp"

namespace ffc {

/// Dense row-major double matrix. Reporting and screening only; no verdict
/// depends on it.
struct DMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  DMatrix() = default;
  explicit DMatrix(std::size_t n_) : n(n_), a(n_ * n_, 0.0) {}
  explicit DMatrix(const RatMatrix& m) : DMatrix(m.size()) {
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m.entries()[i].get_d();
  }

  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Determinant by LU with partial pivoting.
inline double determinant(DMatrix m) {
  const std::size_t n = m.n;
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (m(piv, c) == 0) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = m(r, c) / m(c, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// descending. Sweeps stop once the off-diagonal Frobenius norm is below
/// tol times the matrix norm.
inline std::vector<double> jacobi_eigenvalues(DMatrix m, double tol = 1e-10, int max_sweeps = 100) {
  const std::size_t n = m.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * (1 + std::abs(m(i, j))))
        throw ParameterError("jacobi_eigenvalues needs a symmetric matrix");
  double norm = 0;
  for (double v : m.a) norm += v * v;
  norm = std::sqrt(norm);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2 * m(i, j) * m(i, j);
    if (std::sqrt(off) <= tol * norm || off == 0) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (m(p, q) == 0) continue;
        double theta = (m(q, q) - m(p, p)) / (2 * m(p, q));
        double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = m(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace ffc

#endif  // FFC_LINALG_FLOAT_HPP
