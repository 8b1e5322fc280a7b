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

#include <utility>
#include <vector>

#include "coopcsi/linalg.hpp"

namespace coopcsi {

// Hermitian check tolerance, relative to the largest entry magnitude.
inline constexpr double kHermitianTol = 1e-10;
// PSD check: smallest eigenvalue >= -kPsdTol * largest eigenvalue.
inline constexpr double kPsdTol = 1e-9;

/// Hermitian positive-semidefinite complex matrix.
///
/// The one domain type shared by every module: channel covariances Q_h,
/// estimation error covariances Q_i, quantization error covariances Q_Q,
/// shaping matrices B, and the cellular correlation blocks all live here.
/// Construction validates Hermitian symmetry and positive semidefiniteness
/// and stores the exactly-Hermitized matrix.
class CovMatrix {
 public:
  CovMatrix() = default;

  explicit CovMatrix(Matrix m) {
    if (m.rows() != m.cols())
      throw invalid_covariance("covariance matrix must be square");
    if (!m.allFinite())
      throw invalid_covariance("covariance matrix has non-finite entries");
    const double scale = std::max(1.0, max_abs(m));
    if (!is_hermitian(m, kHermitianTol * scale))
      throw invalid_covariance("covariance matrix is not Hermitian");
    m_ = hermitized(std::move(m));
    Eigen::VectorXd w = hermitian_eigenvalues(m_);
    const double wmax = std::max(w.maxCoeff(), 0.0);
    if (w.minCoeff() < -kPsdTol * std::max(wmax, 1e-300))
      throw invalid_covariance("covariance matrix is not positive semidefinite");
  }

  static CovMatrix identity(int dim) {
    return CovMatrix(Matrix::Identity(dim, dim));
  }

  static CovMatrix zero(int dim) { return CovMatrix(Matrix::Zero(dim, dim)); }

  static CovMatrix from_diagonal(const std::vector<double>& diag) {
    Matrix m = Matrix::Zero(static_cast<int>(diag.size()),
                            static_cast<int>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i)
      m(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    return CovMatrix(std::move(m));
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  double min_eigenvalue() const {
    return dim() == 0 ? 0.0 : hermitian_eigenvalues(m_).minCoeff();
  }
  double max_eigenvalue() const {
    return dim() == 0 ? 0.0 : hermitian_eigenvalues(m_).maxCoeff();
  }

  bool is_positive_definite() const { return min_eigenvalue() > 0.0; }

  /// Returns this matrix with `delta * I` added when the smallest eigenvalue
  /// falls below `delta`. Keeps degenerate error covariances (perfectly known
  /// coefficients) invertible for the fusion formulas.
  CovMatrix regularized(double delta) const {
    if (min_eigenvalue() >= delta) return *this;
    CovMatrix out;
    out.m_ = m_ + delta * Matrix::Identity(dim(), dim());
    return out;
  }

 private:
  Matrix m_;
};

}  // namespace coopcsi
