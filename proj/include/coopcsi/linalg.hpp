// SPDX-License-Identifier: Apache-2.0
//
// coopcsi — decentralized cooperative channel estimation over limited backhaul
// Copyright (C) 2026 The coopcsi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>

#include "coopcsi/errors.hpp"

namespace coopcsi {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix hermitized(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint().eval()) <= tol;
}

/// Eigenvalues of a Hermitian matrix, ascending.
inline Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitized(m),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// A with A A^H = M for Hermitian PSD M; negative eigenvalues clamped to 0.
inline Matrix psd_factor(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitized(m));
  Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * w.asDiagonal();
}

/// Hermitian square root, negative eigenvalues clamped to 0.
inline Matrix hermitian_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitized(m));
  Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

/// Inverse Hermitian square root. Requires positive definite input.
inline Matrix hermitian_inv_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitized(m));
  const Eigen::VectorXd& w = es.eigenvalues();
  const double wmax = std::max(w.maxCoeff(), 0.0);
  if (w.minCoeff() <= 1e-14 * wmax || wmax == 0.0)
    throw ill_conditioned_error("matrix not positive definite in inv-sqrt",
                                wmax > 0.0 ? wmax / std::abs(w.minCoeff())
                                           : std::numeric_limits<double>::infinity());
  Eigen::VectorXd s = w.cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

/// Inverse of a Hermitian matrix via eigendecomposition; throws when the
/// spectrum indicates numerical singularity.
inline Matrix hermitian_inverse(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitized(m));
  const Eigen::VectorXd& w = es.eigenvalues();
  const double wmax = w.cwiseAbs().maxCoeff();
  const double wmin = w.cwiseAbs().minCoeff();
  if (wmin <= 1e-14 * wmax || wmax == 0.0)
    throw ill_conditioned_error(
        "singular Hermitian matrix",
        wmin > 0.0 ? wmax / wmin : std::numeric_limits<double>::infinity());
  Eigen::VectorXd s = w.cwiseInverse();
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

/// Solves A X = RHS for Hermitian A (LDLT, pivoted).
inline Matrix hermitian_solve(const Matrix& a, const Matrix& rhs) {
  Eigen::LDLT<Matrix> ldlt(hermitized(a));
  if (ldlt.info() != Eigen::Success)
    throw ill_conditioned_error("LDLT factorization failed",
                                std::numeric_limits<double>::infinity());
  return ldlt.solve(rhs);
}

/// log det of a positive definite Hermitian matrix.
inline double hermitian_log_det(const Matrix& m) {
  Eigen::VectorXd w = hermitian_eigenvalues(m);
  const double wmax = std::max(w.maxCoeff(), 0.0);
  if (w.minCoeff() <= 1e-14 * wmax || wmax == 0.0)
    throw ill_conditioned_error("log det of a singular matrix",
                                wmax > 0.0 ? wmax / std::abs(w.minCoeff())
                                           : std::numeric_limits<double>::infinity());
  return w.array().log().sum();
}

/// lambda_max / lambda_min magnitude ratio of a Hermitian matrix.
inline double hermitian_condition(const Matrix& m) {
  Eigen::VectorXd w = hermitian_eigenvalues(m).cwiseAbs();
  const double wmin = w.minCoeff();
  if (wmin == 0.0) return std::numeric_limits<double>::infinity();
  return w.maxCoeff() / wmin;
}

/// Frobenius-nearest PSD matrix (eigenvalues clamped to 0).
inline Matrix psd_projected(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitized(m));
  Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

inline double real_trace(const Matrix& m) { return m.trace().real(); }

}  // namespace coopcsi
