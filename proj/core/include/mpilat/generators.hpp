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

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "mpilat/matrix.hpp"
#include "mpilat/particles.hpp"

namespace mpilat {

/// 1-based lattice index pair (j, k).
using PortPair = std::pair<int, int>;

/// -(i/2)|j><k| + (i/2)|k><j| on d modes. Requires 1 <= j < k <= d.
CMatrix ggm_y(int j, int k, int d);
/// (|j><k| + |k><j|)/2 on d modes. Requires 1 <= j < k <= d.
CMatrix ggm_x(int j, int k, int d);
/// |j><j| on d modes.
CMatrix phase_projector(int j, int d);

/// Spin-s operators in the (2s+1)-dimensional irrep, basis m = s, s-1, ..., -s.
CMatrix spin_y(int dim);
CMatrix spin_x(int dim);

/// Permutation of basis states induced by exchanging the occupations of
/// modes j and k. Requires 1 <= j < k <= d.
CMatrix swap_permutation(const FockBasis &basis, int j, int k);

/// Multi-particle generators of the triangular lattice for one particle spec.
///
/// Composite specs (distinguishable, partial) are Kronecker sums over their
/// identical-particle factors, so dim() is the product of the factor dims.
class GeneratorSet {
 public:
  GeneratorSet(const ParticleSpec &spec, int ports);

  int ports() const { return d_; }
  const ParticleSpec &spec() const { return spec_; }
  Eigen::Index dim() const { return dim_; }
  const std::vector<FockBasis> &factor_bases() const { return factors_; }

  /// Requires 1 <= j < k <= d.
  const CMatrix &y(int j, int k) const;
  const CMatrix &x(int j, int k) const;
  const CMatrix &perm(int j, int k) const;
  /// Either index order; Y_{k,j} = Y_{j,k}^T.
  CMatrix y_any(int a, int b) const;
  CMatrix x_any(int a, int b) const;
  /// Requires 1 <= k <= d.
  const CMatrix &e(int k) const;
  /// Requires 1 <= k < d.
  const CMatrix &z(int k) const;
  /// Fermionic specs only; either index order.
  const CMatrix &eta(int a, int b) const;
  bool has_eta() const { return !eta_.empty(); }

  /// Cached spectrum of Y_{j,k} for repeated exponentiation.
  const HermitianSpectrum &y_spectrum(int j, int k) const;

  /// exp(i theta Y_{j,k}) and the diagonal exp(i phi E_k).
  CMatrix beam_splitter(int j, int k, double theta) const;
  Eigen::VectorXcd phase_diagonal(int k, double phi) const;

 private:
  void check_pair(int j, int k) const;
  void check_mode(int k) const;

  ParticleSpec spec_;
  int d_;
  Eigen::Index dim_ = 0;
  std::vector<FockBasis> factors_;
  std::map<PortPair, CMatrix> y_, x_, perm_, eta_;
  std::map<PortPair, HermitianSpectrum> y_spec_;
  std::vector<CMatrix> e_, z_;
};

GeneratorSet build_generator_set(const ParticleSpec &spec, int ports);

/// Diagonal +-1 correction for fermions: -1 on states with n_j = n_k = 1.
/// Built from eta_{1,2} and transported to (j,k) by swaps.
CMatrix eta(const ParticleSpec &spec, int ports, int j, int k);

/// Z_k = -i sqrt(2/(k(k+1))) sum_{j=1..k} j [X_{j,j+1}, Y_{j,j+1}].
CMatrix diag_z(const GeneratorSet &genset, int k);

/// su(3) structure constants recovered from the (2B,3) generators.
struct Su3Table {
  /// t[a-1] is T_a.
  std::array<CMatrix, 8> t;
  /// f[a-1][b-1][c-1] is f^{abc}.
  std::array<std::array<std::array<double, 8>, 8>, 8> f{};
  double closure_residual = 0.0;

  double at(int a, int b, int c) const { return f[a - 1][b - 1][c - 1]; }
};

/// Throws PreconditionError unless genset is Bosons(2) on 3 ports, and
/// ClosureError if some [T_a, T_b] leaves span{T_c} by more than 1e-10.
Su3Table su3_check(const GeneratorSet &genset);

/// Result of checking the eta-corrected commutators on every index triple.
struct EtaCheck {
  double max_error = 0.0;
  /// Same relations without eta, kept to show the correction matters.
  double max_error_uncorrected = 0.0;
  int relations = 0;
};

/// Checks eta[X_aj, Y_ak]eta = -(i/2)X_jk, eta[X_aj, X_ak]eta =
/// eta[Y_aj, Y_ak]eta = (i/2)Y_jk and that pairs without a shared index
/// commute. Requires a fermionic generator set.
EtaCheck check_eta_relations(const GeneratorSet &genset);

}  // namespace mpilat
