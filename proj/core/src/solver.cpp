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

#include "mpilat/solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "mpilat/errors.hpp"

namespace mpilat {

namespace {

constexpr Complex kI(0.0, 1.0);

void throw_unreachable(int k, double remainder) {
  std::ostringstream msg;
  msg << "column " << k << " leaves the span of the lattice paths by " << remainder
      << ", target drifted away from unitarity";
  throw ConsistencyError(msg.str());
}

}  // namespace

double wrap_phase(double phi) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w >= kTwoPi ? 0.0 : w;
}

DecompositionResult decompose(const CMatrix &target, double tolerance) {
  if (target.rows() != target.cols() || target.rows() == 0) {
    std::ostringstream msg;
    msg << "target must be a non-empty square matrix, got " << target.rows()
        << "x" << target.cols();
    throw PreconditionError(msg.str());
  }
  const double defect = unitarity_defect(target);
  if (!(defect <= solver_tol::kTargetUnitarity)) {
    std::ostringstream msg;
    msg << "target is not unitary: ||U U^dag - I||_F = " << defect;
    throw NotUnitaryError(msg.str(), defect);
  }

  const int d = static_cast<int>(target.rows());
  DecompositionResult out;
  out.params = LatticeParams(d);
  out.tolerance = tolerance;

  // e[j] is e_{j,k} for the column being solved, in output-port coordinates.
  std::vector<CVector> e(d + 1, CVector::Zero(d));
  for (int j = 1; j <= d; ++j) e[j](j - 1) = 1.0;

  for (int k = d; k >= 1; --k) {
    int b = 0;
    bool blocked = false;
    // Part of target column k not yet routed by the nodes above.
    CVector rest = target.col(k - 1);

    for (int j = 1; j <= k; ++j) {
      if (blocked) {
        // Everything below a totally reflective node stays reflective.
        if (j < k) out.params.set_theta(j, k, std::numbers::pi);
        out.params.set_phi(j, k, 0.0);
        continue;
      }
      // Rows whose path is blocked, skipped by the jump counter b.
      while (j + b < d && std::abs(e[j](j + b - 1)) < solver_tol::kBlockedOverlap) ++b;

      // The e_{j,k} are orthonormal, so the node amplitude is a projection.
      // Reading row j+b alone and dividing by <j+b|e_{j,k}> gives the same
      // number in exact arithmetic but amplifies rounding by the inverse overlap.
      const Complex amp = e[j].dot(rest);
      CVector after = rest - amp * e[j];
      const double a = std::abs(amp), q = after.norm();
      const double norm = std::hypot(a, q);
      out.z_modulus[{j, k}] = norm > 0.0 ? a / norm : 0.0;

      if (j == k) {
        if (q > solver_tol::kOvershoot) throw_unreachable(k, q);
        out.params.set_phi(k, k, wrap_phase(std::arg(amp)));
        continue;
      }
      // Angle from the routed and remaining parts directly: sqrt(1 - R)
      // cancels when R is close to 1, the remaining norm does not.
      double half = 0.0, phi = 0.0;
      if (q < solver_tol::kBlockedRemainder) {
        half = 0.5 * std::numbers::pi;
        phi = wrap_phase(std::arg(amp));
        blocked = true;
      } else if (a >= solver_tol::kTransmissive) {
        half = std::atan2(a, q);
        phi = wrap_phase(std::arg(amp));
      }
      out.params.set_theta(j, k, 2.0 * half);
      out.params.set_phi(j, k, phi);
      rest = std::move(after);
    }
    out.blocked_jumps[k] = b;

    // Carry the e-vectors to column k - 1.
    CVector n = std::exp(kI * out.params.phi(k, k)) * e[k];
    for (int j = k - 1; j >= 1; --j) {
      const double c = std::cos(0.5 * out.params.theta(j, k));
      const double s = std::sin(0.5 * out.params.theta(j, k));
      const Complex p = std::exp(kI * out.params.phi(j, k));
      CVector next = p * s * e[j] + c * n;
      e[j] = p * c * e[j] - s * n;
      n = std::move(next);
    }
  }

  out.grid = to_grid(out.params);
  out.residual = (assemble_unitary(out.params) - target).norm();
  return out;
}

RoundTripReport verify_roundtrip(const DecompositionResult &result, const CMatrix &target) {
  RoundTripReport report;
  const CMatrix u = assemble_unitary(result.params);
  if (u.rows() != target.rows() || u.cols() != target.cols()) {
    report.residual = std::numeric_limits<double>::infinity();
    report.max_entry_error = report.residual;
  } else {
    report.residual = (u - target).norm();
    report.max_entry_error = (u - target).cwiseAbs().maxCoeff();
  }
  report.z_modulus = result.z_modulus;
  return report;
}

}  // namespace mpilat
