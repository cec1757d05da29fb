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

#include "mpilat/lattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "mpilat/errors.hpp"

namespace mpilat {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_node(int j, int k, int d, bool allow_diagonal) {
  const bool ok = 1 <= j && k <= d && (allow_diagonal ? j <= k : j < k);
  if (!ok) {
    std::ostringstream msg;
    msg << "lattice node (" << j << ", " << k << ") outside the d = " << d
        << " mesh";
    throw PreconditionError(msg.str());
  }
}

double lookup(const std::map<PortPair, double> &m, int j, int k) {
  auto it = m.find({j, k});
  return it == m.end() ? 0.0 : it->second;
}

}  // namespace

LatticeParams::LatticeParams(int d) : d_(d) {
  if (d < 1) throw PreconditionError("lattice needs d >= 1");
}

double LatticeParams::theta(int j, int k) const {
  require_node(j, k, d_, false);
  return lookup(theta_, j, k);
}

double LatticeParams::phi(int j, int k) const {
  require_node(j, k, d_, true);
  return lookup(phi_, j, k);
}

void LatticeParams::set_theta(int j, int k, double value) {
  require_node(j, k, d_, false);
  if (!std::isfinite(value)) throw PreconditionError("theta must be finite");
  theta_[{j, k}] = value;
}

void LatticeParams::set_phi(int j, int k, double value) {
  require_node(j, k, d_, true);
  if (!std::isfinite(value)) throw PreconditionError("phi must be finite");
  phi_[{j, k}] = value;
}

double LatticeParams::reflectivity(int j, int k) const {
  const double s = std::sin(0.5 * theta(j, k));
  return s * s;
}

bool LatticeParams::in_canonical_range() const {
  for (const auto &[key, v] : theta_)
    if (v < 0.0 || v > std::numbers::pi) return false;
  for (const auto &[key, v] : phi_)
    if (v < 0.0 || v >= 2.0 * std::numbers::pi) return false;
  return true;
}

LatticeParams random_params(int d, std::mt19937_64 &rng, double r_min, double r_max) {
  std::uniform_real_distribution<double> refl(r_min, r_max);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  LatticeParams p(d);
  for (int k = 1; k <= d; ++k) {
    for (int j = 1; j < k; ++j)
      p.set_theta(j, k, 2.0 * std::asin(std::sqrt(refl(rng))));
    for (int j = 1; j <= k; ++j) p.set_phi(j, k, phase(rng));
  }
  return p;
}

ReflectivityGrid to_grid(const LatticeParams &params) {
  ReflectivityGrid g;
  g.d = params.d();
  for (int k = 1; k <= g.d; ++k) {
    for (int j = 1; j <= k; ++j) {
      if (j < k) g.r[{j, k}] = params.reflectivity(j, k);
      g.x[{j, k}] = std::cos(params.phi(j, k));
      g.y[{j, k}] = std::sin(params.phi(j, k));
    }
  }
  return g;
}

LatticeParams from_grid(const ReflectivityGrid &grid) {
  LatticeParams p(grid.d);
  for (const auto &[key, r] : grid.r) {
    if (r < 0.0 || r > 1.0) throw PreconditionError("reflectivity outside [0, 1]");
    p.set_theta(key.first, key.second, 2.0 * std::asin(std::sqrt(r)));
  }
  for (const auto &[key, x] : grid.x) {
    double phi = std::atan2(grid.y.at(key), x);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    p.set_phi(key.first, key.second, phi);
  }
  return p;
}

CMatrix assemble_unitary(const LatticeParams &params, const GeneratorSet &genset) {
  if (params.d() != genset.ports()) {
    std::ostringstream msg;
    msg << "parameter grid has d = " << params.d() << " but generators have d = "
        << genset.ports();
    throw PreconditionError(msg.str());
  }
  const int d = params.d();
  CMatrix u = CMatrix::Identity(genset.dim(), genset.dim());
  for (int k = d; k >= 1; --k) {
    u = u * genset.phase_diagonal(k, params.phi(k, k)).asDiagonal();
    for (int j = k - 1; j >= 1; --j) {
      u = u * genset.phase_diagonal(j, params.phi(j, k)).asDiagonal();
      u = u * genset.beam_splitter(j, k, params.theta(j, k));
    }
  }
  return u;
}

CMatrix assemble_unitary(const LatticeParams &params) {
  const int d = params.d();
  CMatrix u = CMatrix::Identity(d, d);
  for (int k = d; k >= 1; --k) {
    u.col(k - 1) *= std::exp(kI * params.phi(k, k));
    for (int j = k - 1; j >= 1; --j) {
      u.col(j - 1) *= std::exp(kI * params.phi(j, k));
      const double c = std::cos(0.5 * params.theta(j, k));
      const double s = std::sin(0.5 * params.theta(j, k));
      const CVector cj = u.col(j - 1);
      u.col(j - 1) = c * cj - s * u.col(k - 1);
      u.col(k - 1) = s * cj + c * u.col(k - 1);
    }
  }
  return u;
}

CMatrix recursion_build(const LatticeParams &params) {
  const int d = params.d();
  // e[j] holds e_{j,k} for the current column k; it starts as |j>.
  std::vector<CVector> e(d + 1, CVector::Zero(d));
  for (int j = 1; j <= d; ++j) e[j](j - 1) = 1.0;
  CMatrix u(d, d);
  for (int k = d; k >= 1; --k) {
    CVector n = std::exp(kI * params.phi(k, k)) * e[k];
    for (int j = k - 1; j >= 1; --j) {
      const double c = std::cos(0.5 * params.theta(j, k));
      const double s = std::sin(0.5 * params.theta(j, k));
      const Complex p = std::exp(kI * params.phi(j, k));
      CVector next = p * s * e[j] + c * n;
      e[j] = p * c * e[j] - s * n;
      n = std::move(next);
    }
    u.col(k - 1) = n;
  }
  return u;
}

std::uint64_t path_count(int j, int k, int d) {
  if (!(1 <= j && j <= d && 1 <= k && k <= d)) {
    std::ostringstream msg;
    msg << "path_count: ports (" << j << ", " << k << ") outside 1.." << d;
    throw PreconditionError(msg.str());
  }
  // Same recursion as recursion_build with every amplitude replaced by 1.
  using Counts = std::vector<std::uint64_t>;
  std::vector<Counts> e(d + 1, Counts(d, 0));
  for (int a = 1; a <= d; ++a) e[a][a - 1] = 1;
  for (int col = d; col >= 1; --col) {
    Counts n = e[col];
    for (int a = col - 1; a >= 1; --a) {
      // n_{a,col} and e_{a,col-1} both collect e_{a,col} + n_{a+1,col}.
      for (int r = 0; r < d; ++r) e[a][r] += n[r];
      n = e[a];
    }
    if (col == k) return n[j - 1];
  }
  return 0;
}

}  // namespace mpilat
