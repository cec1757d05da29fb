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

#include <cstdint>
#include <map>
#include <random>

#include "mpilat/generators.hpp"
#include "mpilat/matrix.hpp"

namespace mpilat {

/// Beam-splitter angles theta_{j,k} (1 <= j < k <= d) and phase-shifter
/// angles phi_{j,k} (1 <= j <= k <= d) of a d-port triangular lattice.
/// Missing entries default to 0, so LatticeParams(d) is the identity lattice.
class LatticeParams {
 public:
  explicit LatticeParams(int d);

  int d() const { return d_; }

  double theta(int j, int k) const;
  double phi(int j, int k) const;
  void set_theta(int j, int k, double value);
  void set_phi(int j, int k, double value);

  const std::map<PortPair, double> &thetas() const { return theta_; }
  const std::map<PortPair, double> &phis() const { return phi_; }

  /// R_{j,k} = sin^2(theta_{j,k}/2).
  double reflectivity(int j, int k) const;

  /// True when every theta lies in [0, pi] and every phi in [0, 2 pi).
  bool in_canonical_range() const;

 private:
  int d_;
  std::map<PortPair, double> theta_;
  std::map<PortPair, double> phi_;
};

/// Parameters with R_{j,k} uniform in [r_min, r_max] and phases uniform in
/// [0, 2 pi).
LatticeParams random_params(int d, std::mt19937_64 &rng, double r_min = 0.0,
                            double r_max = 1.0);

/// Reflectivities and unit phasors x + iy = exp(i phi) per node.
struct ReflectivityGrid {
  int d = 0;
  std::map<PortPair, double> r;
  std::map<PortPair, double> x;
  std::map<PortPair, double> y;
};

ReflectivityGrid to_grid(const LatticeParams &params);
LatticeParams from_grid(const ReflectivityGrid &grid);

/// U^lat = prod_{k=d..1} e^{i phi_kk E_k} prod_{j=k-1..1} e^{i phi_jk E_j}
/// e^{i theta_jk Y_jk}, multiplied left to right in the listed order.
CMatrix assemble_unitary(const LatticeParams &params, const GeneratorSet &genset);

/// Single-particle lattice using 2x2 column updates instead of full products.
CMatrix assemble_unitary(const LatticeParams &params);

/// Single-particle lattice from the vector recursion along the mesh: column k
/// is the vector n_{1,k} collected at output port k.
CMatrix recursion_build(const LatticeParams &params);

/// Number of monotone mesh paths contributing to entry (j, k) of the
/// single-particle U^lat, i.e. the number of summands of that entry.
std::uint64_t path_count(int j, int k, int d);

}  // namespace mpilat
