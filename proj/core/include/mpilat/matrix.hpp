// Copyright 2026 The mpilat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mpilat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Tolerance ladder shared by construction checks, round trips and fixtures.
namespace tol {
inline constexpr double kConstruction = 1e-12;
inline constexpr double kRoundTrip = 1e-9;
inline constexpr double kFixture = 1e-10;
inline constexpr double kPrintedFixture = 5e-4;
}  // namespace tol

/// ||M M^dag - I||_F, or +inf for non-square input.
double unitarity_defect(const CMatrix &m);
/// ||M - M^dag||_F, or +inf for non-square input.
double hermiticity_defect(const CMatrix &m);

bool is_unitary(const CMatrix &m, double tol = tol::kConstruction);
bool is_hermitian(const CMatrix &m, double tol = tol::kConstruction);
bool is_diagonal(const CMatrix &m, double tol = 0.0);

/// Eigendecomposition H = V diag(lambda) V^dag of a Hermitian matrix, kept
/// around so that exp(i theta H) can be evaluated for many angles cheaply.
class HermitianSpectrum {
 public:
  HermitianSpectrum() = default;
  /// Throws PreconditionError if H is not square or not Hermitian within
  /// tol::kConstruction.
  explicit HermitianSpectrum(const CMatrix &h);

  Eigen::Index dim() const { return eigenvalues_.size(); }
  const Eigen::VectorXd &eigenvalues() const { return eigenvalues_; }
  const CMatrix &eigenvectors() const { return eigenvectors_; }

  /// V diag(exp(i theta lambda)) V^dag.
  CMatrix exp_i(double theta) const;

 private:
  Eigen::VectorXd eigenvalues_;
  CMatrix eigenvectors_;
};

/// exp(i theta H) for Hermitian H via the spectral decomposition.
CMatrix expm_hermitian(const CMatrix &h, double theta);

/// Kronecker product A (x) B.
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Block-diagonal matrix with the given square blocks along the diagonal.
CMatrix direct_sum(std::span<const CMatrix> blocks);

/// Commutator [A, B] = AB - BA.
inline CMatrix commutator(const CMatrix &a, const CMatrix &b) {
  return a * b - b * a;
}

/// Kronecker sum: sum_p 1 (x) ... (x) op_p (x) ... (x) 1, where factor p has
/// dimension dims[p] and op_p is placed in slot p. Slots without an operator
/// (nullptr) contribute nothing.
CMatrix kron_sum(std::span<const CMatrix *const> ops,
                 std::span<const Eigen::Index> dims);

}  // namespace mpilat
