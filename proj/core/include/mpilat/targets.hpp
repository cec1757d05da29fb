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

#include <cstddef>
#include <string>
#include <vector>

#include "mpilat/generators.hpp"
#include "mpilat/lattice.hpp"
#include "mpilat/matrix.hpp"
#include "mpilat/particles.hpp"

namespace mpilat {

/// F(d)_{j,k} = e^{2 pi i (j-1)(k-1)/d} / sqrt(d).
CMatrix dft(int d);

/// Wigner small d-matrix exp(i theta S_y) in the (2s+1)-dim irrep.
/// s must be a non-negative multiple of 1/2.
CMatrix wigner_d(double s, double theta);

/// Output amplitudes of |M,N> behind a two-port beam splitter,
/// expanded from (c a1^dag - s a2^dag)^M (c a2^dag + s a1^dag)^N / sqrt(M!N!).
/// Entry i is the amplitude of |M+N-i, i>, the 2-port Fock basis order.
CVector boson_bs_oracle(int m, int n, double theta);

/// One occupation vector per identical-particle factor of a spec.
using MultiState = std::vector<Occupation>;

/// Position of a multi-state in the generator basis (first factor slowest).
std::size_t state_index(const GeneratorSet &genset, const MultiState &state);
MultiState state_at(const GeneratorSet &genset, std::size_t index);
/// "|1,0,1>" or "|1,0>|0,1>" for composite specs.
std::string state_label(const MultiState &state);

/// A multi-particle input sent through a parametrized lattice.
struct Scenario {
  ParticleSpec spec = ParticleSpec::single();
  LatticeParams params{1};
  CVector input;
};

/// |out> = U^lat |in>. Throws PreconditionError if the input is not
/// normalized within 1e-12 or has the wrong dimension.
CVector evolve(const Scenario &scenario, const GeneratorSet &genset);

/// Single-particle 3-port lattice that imitates a two-boson splitter:
/// R_{1,3} = t^2, R_{2,3} = R_{1,2} = 2t/(t+1), t = sin^2(theta/2), phi = 0.
LatticeParams hom_3port_params(double theta);

struct HomReport {
  double theta = 0.0;
  Scenario scenario;
  CMatrix lattice;
  CMatrix wigner;
  /// Lattice applied to |0,1,0>, the image of |1,1>.
  CVector output;
  /// Probability of the |0,1,0> event, the image of coincidence |1,1>.
  double coincidence_probability = 0.0;
  /// max |lattice - d_1(theta)| under |2,0>,|1,1>,|0,2> <-> |1,0,0>,|0,1,0>,|0,0,1>.
  double max_deviation = 0.0;
};

HomReport hom_3port_simulation(double theta);

struct BellReport {
  double theta = 0.0;
  /// Basis |p1,p2> with p the port of particle 1 and 2: (11, 12, 21, 22).
  CVector psi_plus_in, psi_minus_in, product_in;
  CVector psi_plus_out, psi_minus_out, product_out;
};

/// Two distinguishable particles (spin up/down) on one beam splitter.
BellReport bell_scattering(double theta);

/// Amplitude <out|U^lat|in> summed over assignments of particles to
/// single-particle lattice amplitudes: permanent for bosons, determinant for
/// fermions, plain product across distinguishable factors.
///
/// Fermions: the lattice generators carry no exchange signs, so the sector
/// n = d - 1 >= 2 is matched by evaluating the single-particle lattice at
/// theta_{j,k} -> (-1)^{k-j-1} theta_{j,k}. Other sectors with
/// 2 <= n <= d - 2 have no such mapping and raise CapacityError, as do
/// n > 3 or d > 4.
Complex path_assignment_oracle(const ParticleSpec &spec, const LatticeParams &params,
                               const MultiState &in, const MultiState &out);

}  // namespace mpilat
