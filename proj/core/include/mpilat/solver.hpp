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

#include <map>

#include "mpilat/lattice.hpp"
#include "mpilat/matrix.hpp"

namespace mpilat {

/// Node-classification thresholds of the solver.
namespace solver_tol {
/// |<e_{j,k}|rest>| below this is total transmission (R = 0, phi = 0).
inline constexpr double kTransmissive = 1e-12;
/// A node is totally reflective (R = 1) when the part of its column left
/// for the nodes below it has norm under this.
inline constexpr double kBlockedRemainder = 1e-11;
/// Row overlaps <j+b|e_{j,k}> below this count as blocked paths.
inline constexpr double kBlockedOverlap = 1e-12;
/// Part of a column outside the span of its lattice paths that is still
/// accepted as rounding.
inline constexpr double kOvershoot = 1e-9;
/// Allowed ||U U^dag - I||_F of a target.
inline constexpr double kTargetUnitarity = 1e-10;
}  // namespace solver_tol

struct DecompositionResult {
  LatticeParams params{1};
  ReflectivityGrid grid;
  /// Final blocked-path offset b per output column k.
  std::map<int, int> blocked_jumps;
  /// |Z_{j,k}| at every solved node, diagonal included.
  std::map<PortPair, double> z_modulus;
  /// ||assemble_unitary(params) - target||_F.
  double residual = 0.0;
  double tolerance = tol::kRoundTrip;

  bool ok() const { return residual <= tolerance; }
};

/// Computes every reflectivity and phase of the single-particle lattice that
/// realizes `target`. Nodes are solved column by column from k = d down to 1,
/// top to bottom inside a column.
///
/// Throws NotUnitaryError for non-unitary targets and ConsistencyError when a
/// node quotient overshoots |Z| = 1. A residual above `tolerance` is reported
/// through the result, not thrown.
DecompositionResult decompose(const CMatrix &target, double tolerance = tol::kRoundTrip);

struct RoundTripReport {
  double residual = 0.0;
  double max_entry_error = 0.0;
  std::map<PortPair, double> z_modulus;
};

/// Re-synthesizes result.params and compares with target.
RoundTripReport verify_roundtrip(const DecompositionResult &result, const CMatrix &target);

/// Maps an angle into [0, 2 pi).
double wrap_phase(double phi);

}  // namespace mpilat
