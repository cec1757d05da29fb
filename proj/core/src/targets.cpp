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

#include "mpilat/targets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "mpilat/errors.hpp"

namespace mpilat {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<int> occupied_modes(const Occupation &occ) {
  std::vector<int> modes;
  for (int m = 0; m < static_cast<int>(occ.size()); ++m)
    for (int c = 0; c < occ[m]; ++c) modes.push_back(m);
  return modes;
}

// Sum over permutations p of sign(p)^antisym * prod_i m(i, p(i)).
Complex permanent_or_determinant(const CMatrix &m, bool antisym) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Complex total = 0.0;
  do {
    int inversions = 0;
    if (antisym)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) inversions += p[a] > p[b];
    Complex term = (inversions % 2) ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

void check_state(const FockBasis &basis, const Occupation &occ, const char *which) {
  if (static_cast<int>(occ.size()) != basis.ports() || !basis.contains(occ)) {
    std::ostringstream msg;
    msg << which << " state is not a valid occupation for " << basis.particle_count()
        << (basis.statistics() == Statistics::Boson ? " bosons" : " fermions")
        << " on " << basis.ports() << " ports";
    throw PreconditionError(msg.str());
  }
}

}  // namespace

CMatrix dft(int d) {
  if (d < 1) throw PreconditionError("dft: d must be >= 1");
  CMatrix f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      // Reduce the exponent first so large d keeps full phase accuracy.
      const double angle = 2.0 * std::numbers::pi * ((j * k) % d) / d;
      f(j, k) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  return f;
}

CMatrix wigner_d(double s, double theta) {
  const double two_s = 2.0 * s;
  if (!(two_s >= 0.0) || std::abs(two_s - std::round(two_s)) > 1e-12) {
    std::ostringstream msg;
    msg << "wigner_d: spin must be a non-negative multiple of 1/2, got " << s;
    throw PreconditionError(msg.str());
  }
  return expm_hermitian(spin_y(static_cast<int>(std::lround(two_s)) + 1), theta);
}

CVector boson_bs_oracle(int m, int n, double theta) {
  if (m < 0 || n < 0) throw PreconditionError("boson_bs_oracle: occupations must be >= 0");
  const int total = m + n;
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  // poly[p] is the coefficient of (a1^dag)^p (a2^dag)^(total - p).
  std::vector<double> poly(total + 1, 0.0);
  for (int a = 0; a <= m; ++a) {
    const double fa = binomial(m, a) * std::pow(c, a) * std::pow(-s, m - a);
    for (int b = 0; b <= n; ++b) {
      const double fb = binomial(n, b) * std::pow(s, b) * std::pow(c, n - b);
      poly[a + b] += fa * fb;
    }
  }
  const double norm = std::sqrt(factorial(m) * factorial(n));
  CVector out(total + 1);
  for (int p = 0; p <= total; ++p)
    out(total - p) = poly[p] * std::sqrt(factorial(p) * factorial(total - p)) / norm;
  return out;
}

std::size_t state_index(const GeneratorSet &genset, const MultiState &state) {
  const auto &bases = genset.factor_bases();
  if (state.size() != bases.size()) {
    std::ostringstream msg;
    msg << "state has " << state.size() << " factors, spec '"
        << genset.spec().to_string() << "' has " << bases.size();
    throw PreconditionError(msg.str());
  }
  std::size_t index = 0;
  for (std::size_t f = 0; f < bases.size(); ++f) {
    check_state(bases[f], state[f], "multi-particle");
    index = index * bases[f].size() + bases[f].index_of(state[f]);
  }
  return index;
}

MultiState state_at(const GeneratorSet &genset, std::size_t index) {
  const auto &bases = genset.factor_bases();
  if (index >= static_cast<std::size_t>(genset.dim()))
    throw PreconditionError("basis index out of range");
  MultiState state(bases.size());
  for (std::size_t f = bases.size(); f-- > 0;) {
    state[f] = bases[f].state(index % bases[f].size());
    index /= bases[f].size();
  }
  return state;
}

std::string state_label(const MultiState &state) {
  std::ostringstream out;
  for (const auto &occ : state) {
    out << '|';
    for (std::size_t i = 0; i < occ.size(); ++i) out << (i ? "," : "") << occ[i];
    out << '>';
  }
  return out.str();
}

CVector evolve(const Scenario &scenario, const GeneratorSet &genset) {
  if (scenario.input.size() != genset.dim()) {
    std::ostringstream msg;
    msg << "input state has dimension " << scenario.input.size() << ", basis has "
        << genset.dim();
    throw PreconditionError(msg.str());
  }
  const double norm = scenario.input.norm();
  if (std::abs(norm - 1.0) > tol::kConstruction) {
    std::ostringstream msg;
    msg << "input state is not normalized: ||psi|| = " << norm;
    throw PreconditionError(msg.str());
  }
  return assemble_unitary(scenario.params, genset) * scenario.input;
}

LatticeParams hom_3port_params(double theta) {
  const double t = std::pow(std::sin(0.5 * theta), 2);
  const double r13 = t * t;
  const double r12 = 2.0 * t / (t + 1.0);
  auto angle = [](double r) { return 2.0 * std::asin(std::sqrt(std::clamp(r, 0.0, 1.0))); };
  LatticeParams p(3);
  p.set_theta(1, 3, angle(r13));
  p.set_theta(2, 3, angle(r12));
  p.set_theta(1, 2, angle(r12));
  return p;
}

HomReport hom_3port_simulation(double theta) {
  HomReport report;
  report.theta = theta;
  report.scenario.spec = ParticleSpec::single();
  report.scenario.params = hom_3port_params(theta);
  report.scenario.input = CVector::Unit(3, 1);
  report.lattice = assemble_unitary(report.scenario.params);
  report.wigner = wigner_d(1.0, theta);
  report.output = report.lattice * report.scenario.input;
  report.coincidence_probability = std::norm(report.output(1));
  report.max_deviation = (report.lattice - report.wigner).cwiseAbs().maxCoeff();
  return report;
}

BellReport bell_scattering(double theta) {
  const GeneratorSet genset(ParticleSpec::distinguishable(2), 2);
  const CMatrix u = genset.beam_splitter(1, 2, theta);
  const double h = 1.0 / std::sqrt(2.0);
  BellReport report;
  report.theta = theta;
  report.psi_plus_in = CVector::Zero(4);
  report.psi_plus_in << 0.0, h, h, 0.0;
  report.psi_minus_in = CVector::Zero(4);
  report.psi_minus_in << 0.0, h, -h, 0.0;
  report.product_in = CVector::Unit(4, 1);
  report.psi_plus_out = u * report.psi_plus_in;
  report.psi_minus_out = u * report.psi_minus_in;
  report.product_out = u * report.product_in;
  return report;
}

Complex path_assignment_oracle(const ParticleSpec &spec, const LatticeParams &params,
                               const MultiState &in, const MultiState &out) {
  const int d = params.d();
  if (spec.particle_count() > 3 || d > 4) {
    std::ostringstream msg;
    msg << "path_assignment_oracle enumerates at most 3 particles on 4 ports, got "
        << spec.particle_count() << " on " << d;
    throw CapacityError(msg.str());
  }
  spec.check_capacity(d);
  const auto groups = spec.factors();
  if (in.size() != groups.size() || out.size() != groups.size())
    throw PreconditionError("state factor count does not match the spec");

  const CMatrix plain = assemble_unitary(params);
  Complex amplitude = 1.0;
  for (std::size_t f = 0; f < groups.size(); ++f) {
    const auto &g = groups[f];
    const FockBasis basis(g.count, g.stat, d);
    check_state(basis, in[f], "input");
    check_state(basis, out[f], "output");
    const bool fermion = g.stat == Statistics::Fermion;

    CMatrix u1 = plain;
    if (fermion && g.count >= 2 && g.count < d) {
      if (g.count != d - 1) {
        std::ostringstream msg;
        msg << "no path-assignment sign rule for " << g.count << " fermions on " << d
            << " ports";
        throw CapacityError(msg.str());
      }
      LatticeParams flipped = params;
      for (const auto &[key, v] : params.thetas())
        if ((key.second - key.first - 1) % 2) flipped.set_theta(key.first, key.second, -v);
      u1 = assemble_unitary(flipped);
    }

    const auto rows = occupied_modes(out[f]);
    const auto cols = occupied_modes(in[f]);
    CMatrix sub(g.count, g.count);
    for (int a = 0; a < g.count; ++a)
      for (int b = 0; b < g.count; ++b) sub(a, b) = u1(rows[a], cols[b]);
    Complex term = permanent_or_determinant(sub, fermion);
    if (!fermion) {
      double weight = 1.0;
      for (int c : in[f]) weight *= factorial(c);
      for (int c : out[f]) weight *= factorial(c);
      term /= std::sqrt(weight);
    }
    amplitude *= term;
  }
  return amplitude;
}

}  // namespace mpilat
