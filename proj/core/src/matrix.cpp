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

#include "mpilat/matrix.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "mpilat/errors.hpp"

namespace mpilat {

double unitarity_defect(const CMatrix &m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m * m.adjoint() - CMatrix::Identity(m.rows(), m.cols())).norm();
}

double hermiticity_defect(const CMatrix &m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).norm();
}

bool is_unitary(const CMatrix &m, double tol) {
  return unitarity_defect(m) <= tol;
}

bool is_hermitian(const CMatrix &m, double tol) {
  return hermiticity_defect(m) <= tol;
}

bool is_diagonal(const CMatrix &m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != c && std::abs(m(r, c)) > tol) return false;
  return true;
}

HermitianSpectrum::HermitianSpectrum(const CMatrix &h) {
  if (h.rows() != h.cols()) {
    std::ostringstream msg;
    msg << "expected a square matrix, got " << h.rows() << "x" << h.cols();
    throw PreconditionError(msg.str());
  }
  const double defect = hermiticity_defect(h);
  if (defect > tol::kConstruction) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: ||H - H^dag||_F = " << defect;
    throw PreconditionError(msg.str());
  }
  if (h.rows() == 0) return;
  // Symmetrize so that the solver sees an exactly Hermitian input.
  const CMatrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  if (solver.info() != Eigen::Success)
    throw ConsistencyError("Hermitian eigendecomposition did not converge");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

CMatrix HermitianSpectrum::exp_i(double theta) const {
  // V V^dag is the identity only up to rounding; keep erased nodes exact.
  if (theta == 0.0) return CMatrix::Identity(dim(), dim());
  CVector phases(eigenvalues_.size());
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i)
    phases(i) = std::polar(1.0, theta * eigenvalues_(i));
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

CMatrix expm_hermitian(const CMatrix &h, double theta) {
  return HermitianSpectrum(h).exp_i(theta);
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix direct_sum(std::span<const CMatrix> blocks) {
  Eigen::Index dim = 0;
  for (const auto &b : blocks) {
    if (b.rows() != b.cols()) {
      std::ostringstream msg;
      msg << "direct_sum: block of shape " << b.rows() << "x" << b.cols()
          << " is not square";
      throw PreconditionError(msg.str());
    }
    dim += b.rows();
  }
  CMatrix out = CMatrix::Zero(dim, dim);
  Eigen::Index offset = 0;
  for (const auto &b : blocks) {
    out.block(offset, offset, b.rows(), b.cols()) = b;
    offset += b.rows();
  }
  return out;
}

CMatrix kron_sum(std::span<const CMatrix *const> ops,
                 std::span<const Eigen::Index> dims) {
  if (ops.size() != dims.size())
    throw PreconditionError("kron_sum: operator and dimension lists differ");
  Eigen::Index total = 1;
  for (auto d : dims) total *= d;
  CMatrix out = CMatrix::Zero(total, total);
  for (std::size_t p = 0; p < ops.size(); ++p) {
    if (ops[p] == nullptr) continue;
    if (ops[p]->rows() != dims[p] || ops[p]->cols() != dims[p])
      throw PreconditionError("kron_sum: operator does not match its slot");
    Eigen::Index left = 1, right = 1;
    for (std::size_t q = 0; q < p; ++q) left *= dims[q];
    for (std::size_t q = p + 1; q < dims.size(); ++q) right *= dims[q];
    out += kron(kron(CMatrix::Identity(left, left), *ops[p]),
                CMatrix::Identity(right, right));
  }
  return out;
}

}  // namespace mpilat
