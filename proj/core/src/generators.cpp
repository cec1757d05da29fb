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

#include "mpilat/generators.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "mpilat/errors.hpp"

namespace mpilat {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_pair(int j, int k, int d, const char *what) {
  if (!(1 <= j && j < k && k <= d)) {
    std::ostringstream msg;
    msg << what << ": need 1 <= j < k <= d, got (" << j << ", " << k
        << ") with d = " << d;
    throw PreconditionError(msg.str());
  }
}

// Basis permutation for the mode relabeling a -> sigma[a] (0-based): state s
// goes to t with t[sigma[a]] = s[a].
CMatrix mode_permutation(const FockBasis &basis, const std::vector<int> &sigma) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  CMatrix p = CMatrix::Zero(n, n);
  Occupation t(basis.ports());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto &s = basis.state(i);
    for (int a = 0; a < basis.ports(); ++a) t[sigma[a]] = s[a];
    p(static_cast<Eigen::Index>(basis.index_of(t)), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return p;
}

// Shortest chain of swaps carrying the ordered pair `from` onto `to`, applied
// right to left: P = swaps.back() ... swaps.front().
std::vector<PortPair> swap_route(PortPair from, PortPair to) {
  std::vector<PortPair> route;
  auto [a, b] = from;
  const auto [j, k] = to;
  if (b != k) {
    route.emplace_back(std::min(b, k), std::max(b, k));
    if (a == k) a = b;
  }
  if (a != j) route.emplace_back(std::min(a, j), std::max(a, j));
  return route;
}

CMatrix route_matrix(const FockBasis &basis, PortPair from, PortPair to) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  CMatrix p = CMatrix::Identity(n, n);
  for (auto [a, b] : swap_route(from, to)) p = swap_permutation(basis, a, b) * p;
  return p;
}

struct FactorGenerators {
  std::map<PortPair, CMatrix> y, x, perm;
  std::vector<CMatrix> e;
};

FactorGenerators factor_generators(const FockBasis &basis) {
  const int d = basis.ports();
  const auto n = static_cast<Eigen::Index>(basis.size());
  FactorGenerators out;
  for (int k = 0; k < d; ++k) {
    CMatrix e = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      e(i, i) = basis.state(static_cast<std::size_t>(i))[k];
    out.e.push_back(std::move(e));
  }
  if (d < 2) return out;

  std::vector<CMatrix> ys, xs;
  for (int len : basis.partition()) {
    ys.push_back(spin_y(len));
    xs.push_back(spin_x(len));
  }
  const CMatrix seed_y = direct_sum(ys);
  const CMatrix seed_x = direct_sum(xs);
  for (int j = 1; j <= d; ++j) {
    for (int k = j + 1; k <= d; ++k) {
      const CMatrix p = route_matrix(basis, {d - 1, d}, {j, k});
      out.y.emplace(PortPair{j, k}, p * seed_y * p.transpose());
      out.x.emplace(PortPair{j, k}, p * seed_x * p.transpose());
      out.perm.emplace(PortPair{j, k}, swap_permutation(basis, j, k));
    }
  }
  return out;
}

}  // namespace

CMatrix ggm_y(int j, int k, int d) {
  require_pair(j, k, d, "ggm_y");
  CMatrix m = CMatrix::Zero(d, d);
  m(j - 1, k - 1) = -0.5 * kI;
  m(k - 1, j - 1) = 0.5 * kI;
  return m;
}

CMatrix ggm_x(int j, int k, int d) {
  require_pair(j, k, d, "ggm_x");
  CMatrix m = CMatrix::Zero(d, d);
  m(j - 1, k - 1) = 0.5;
  m(k - 1, j - 1) = 0.5;
  return m;
}

CMatrix phase_projector(int j, int d) {
  if (!(1 <= j && j <= d)) {
    std::ostringstream msg;
    msg << "phase_projector: need 1 <= j <= d, got j = " << j << ", d = " << d;
    throw PreconditionError(msg.str());
  }
  CMatrix m = CMatrix::Zero(d, d);
  m(j - 1, j - 1) = 1.0;
  return m;
}

CMatrix spin_y(int dim) {
  if (dim < 1) throw PreconditionError("spin_y: dimension must be >= 1");
  const double s = 0.5 * (dim - 1);
  CMatrix m = CMatrix::Zero(dim, dim);
  // Row a has m_a = s - a; S_+ raises column b into row b - 1.
  for (int b = 1; b < dim; ++b) {
    const double mb = s - b;
    const double amp = std::sqrt(s * (s + 1) - mb * (mb + 1));
    m(b - 1, b) = amp / (2.0 * kI);
    m(b, b - 1) = -amp / (2.0 * kI);
  }
  return m;
}

CMatrix spin_x(int dim) {
  if (dim < 1) throw PreconditionError("spin_x: dimension must be >= 1");
  return spin_y(dim).cwiseAbs().cast<Complex>();
}

CMatrix swap_permutation(const FockBasis &basis, int j, int k) {
  require_pair(j, k, basis.ports(), "swap_permutation");
  std::vector<int> sigma(basis.ports());
  for (int a = 0; a < basis.ports(); ++a) sigma[a] = a;
  std::swap(sigma[j - 1], sigma[k - 1]);
  return mode_permutation(basis, sigma);
}

GeneratorSet::GeneratorSet(const ParticleSpec &spec, int ports)
    : spec_(spec), d_(ports) {
  if (ports < 1) throw PreconditionError("port count must be >= 1");
  spec.check_capacity(ports);

  std::vector<FactorGenerators> parts;
  std::vector<Eigen::Index> dims;
  for (const auto &g : spec.factors()) {
    factors_.emplace_back(g.count, g.stat, ports);
    parts.push_back(factor_generators(factors_.back()));
    dims.push_back(static_cast<Eigen::Index>(factors_.back().size()));
  }
  dim_ = 1;
  for (auto n : dims) dim_ *= n;

  const std::size_t nf = parts.size();
  std::vector<const CMatrix *> slots(nf);
  auto sum_over = [&](auto pick) {
    for (std::size_t f = 0; f < nf; ++f) slots[f] = &pick(parts[f]);
    return kron_sum(slots, dims);
  };

  for (int k = 1; k <= d_; ++k)
    e_.push_back(sum_over([&](FactorGenerators &p) -> const CMatrix & { return p.e[k - 1]; }));

  for (int j = 1; j <= d_; ++j) {
    for (int k = j + 1; k <= d_; ++k) {
      const PortPair key{j, k};
      y_.emplace(key, sum_over([&](FactorGenerators &p) -> const CMatrix & { return p.y.at(key); }));
      x_.emplace(key, sum_over([&](FactorGenerators &p) -> const CMatrix & { return p.x.at(key); }));
      CMatrix perm = CMatrix::Identity(1, 1);
      for (auto &p : parts) perm = kron(perm, p.perm.at(key));
      perm_.emplace(key, std::move(perm));
      y_spec_.emplace(key, HermitianSpectrum(y_.at(key)));
    }
  }

  for (int k = 1; k < d_; ++k) z_.push_back(diag_z(*this, k));

  if (spec.is_fermionic()) {
    for (int j = 1; j <= d_; ++j)
      for (int k = j + 1; k <= d_; ++k)
        eta_.emplace(PortPair{j, k}, mpilat::eta(spec, ports, j, k));
  }
}

void GeneratorSet::check_pair(int j, int k) const {
  require_pair(j, k, d_, "generator index");
}

void GeneratorSet::check_mode(int k) const {
  if (!(1 <= k && k <= d_)) {
    std::ostringstream msg;
    msg << "mode index " << k << " outside 1.." << d_;
    throw PreconditionError(msg.str());
  }
}

const CMatrix &GeneratorSet::y(int j, int k) const {
  check_pair(j, k);
  return y_.at({j, k});
}

const CMatrix &GeneratorSet::x(int j, int k) const {
  check_pair(j, k);
  return x_.at({j, k});
}

const CMatrix &GeneratorSet::perm(int j, int k) const {
  check_pair(j, k);
  return perm_.at({j, k});
}

CMatrix GeneratorSet::y_any(int a, int b) const {
  return a < b ? y(a, b) : CMatrix(y(b, a).transpose());
}

CMatrix GeneratorSet::x_any(int a, int b) const {
  return a < b ? x(a, b) : CMatrix(x(b, a).transpose());
}

const CMatrix &GeneratorSet::e(int k) const {
  check_mode(k);
  return e_[k - 1];
}

const CMatrix &GeneratorSet::z(int k) const {
  if (!(1 <= k && k < d_)) {
    std::ostringstream msg;
    msg << "Z_k needs 1 <= k < d, got k = " << k << ", d = " << d_;
    throw PreconditionError(msg.str());
  }
  return z_[k - 1];
}

const CMatrix &GeneratorSet::eta(int a, int b) const {
  if (!has_eta())
    throw PreconditionError("eta is only defined for fermionic specs");
  return eta_.at({std::min(a, b), std::max(a, b)});
}

const HermitianSpectrum &GeneratorSet::y_spectrum(int j, int k) const {
  check_pair(j, k);
  return y_spec_.at({j, k});
}

CMatrix GeneratorSet::beam_splitter(int j, int k, double theta) const {
  return y_spectrum(j, k).exp_i(theta);
}

Eigen::VectorXcd GeneratorSet::phase_diagonal(int k, double phi) const {
  const CMatrix &ek = e(k);
  Eigen::VectorXcd out(dim_);
  for (Eigen::Index i = 0; i < dim_; ++i)
    out(i) = std::exp(kI * (phi * ek(i, i).real()));
  return out;
}

GeneratorSet build_generator_set(const ParticleSpec &spec, int ports) {
  return GeneratorSet(spec, ports);
}

CMatrix eta(const ParticleSpec &spec, int ports, int j, int k) {
  if (!spec.is_fermionic())
    throw PreconditionError("eta: spec '" + spec.to_string() + "' is not fermionic");
  const FockBasis basis = fock_basis(spec, ports);
  require_pair(j, k, ports, "eta");
  const auto n = static_cast<Eigen::Index>(basis.size());
  CMatrix eta12 = CMatrix::Identity(n, n);
  // Descending order lists the states with n_1 = n_2 = 1 first.
  const auto flipped = static_cast<Eigen::Index>(
      binomial(ports - 2, spec.particle_count() - 2));
  for (Eigen::Index i = 0; i < flipped; ++i) eta12(i, i) = -1.0;
  const CMatrix p = route_matrix(basis, {1, 2}, {j, k});
  return p * eta12 * p.transpose();
}

CMatrix diag_z(const GeneratorSet &genset, int k) {
  if (!(1 <= k && k < genset.ports())) {
    std::ostringstream msg;
    msg << "diag_z: need 1 <= k < d, got k = " << k << ", d = " << genset.ports();
    throw PreconditionError(msg.str());
  }
  CMatrix acc = CMatrix::Zero(genset.dim(), genset.dim());
  for (int j = 1; j <= k; ++j)
    acc += static_cast<double>(j) * commutator(genset.x(j, j + 1), genset.y(j, j + 1));
  return -kI * std::sqrt(2.0 / (k * (k + 1.0))) * acc;
}

Su3Table su3_check(const GeneratorSet &genset) {
  if (!(genset.spec() == ParticleSpec::bosons(2) && genset.ports() == 3))
    throw PreconditionError("su3_check expects the (2B,3) generator set");
  Su3Table out;
  auto &t = out.t;
  t[0] = genset.x(1, 2);
  t[1] = genset.y(1, 2);
  t[2] = -kI * commutator(t[0], t[1]);
  t[3] = genset.x(1, 3);
  t[4] = genset.y(1, 3);
  t[5] = genset.x(2, 3);
  t[6] = genset.y(2, 3);
  t[7] = -(t[2] + 2.0 * kI * commutator(t[3], t[4])) / std::sqrt(3.0);

  auto inner = [](const CMatrix &a, const CMatrix &b) {
    return (a.adjoint() * b).trace().real();
  };
  Eigen::Matrix<double, 8, 8> gram;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) gram(a, b) = inner(t[a], t[b]);
  const auto solver = gram.ldlt();

  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const CMatrix c = -kI * commutator(t[a], t[b]);
      Eigen::Matrix<double, 8, 1> rhs;
      for (int d = 0; d < 8; ++d) rhs(d) = inner(t[d], c);
      const Eigen::Matrix<double, 8, 1> coeff = solver.solve(rhs);
      CMatrix rebuilt = CMatrix::Zero(c.rows(), c.cols());
      for (int d = 0; d < 8; ++d) {
        out.f[a][b][d] = coeff(d);
        rebuilt += coeff(d) * t[d];
      }
      out.closure_residual = std::max(out.closure_residual, (c - rebuilt).norm());
    }
  }
  if (out.closure_residual > tol::kFixture) {
    std::ostringstream msg;
    msg << "su(3) commutators do not close: residual " << out.closure_residual;
    throw ClosureError(msg.str(), out.closure_residual);
  }
  return out;
}

EtaCheck check_eta_relations(const GeneratorSet &genset) {
  if (!genset.has_eta())
    throw PreconditionError("check_eta_relations needs a fermionic generator set");
  const int d = genset.ports();
  EtaCheck out;
  auto dist = [](const CMatrix &a, const CMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
  };
  for (int a = 1; a <= d; ++a) {
    for (int j = 1; j <= d; ++j) {
      for (int k = 1; k <= d; ++k) {
        if (a == j || a == k || j == k) continue;
        const CMatrix xaj = genset.x_any(a, j), xak = genset.x_any(a, k);
        const CMatrix yaj = genset.y_any(a, j), yak = genset.y_any(a, k);
        const CMatrix want_x = -0.5 * kI * genset.x_any(j, k);
        const CMatrix want_y = 0.5 * kI * genset.y_any(j, k);
        const CMatrix c1 = commutator(xaj, yak);
        const CMatrix c2 = commutator(xaj, xak);
        const CMatrix c3 = commutator(yaj, yak);
        for (const CMatrix *e : {&genset.eta(a, j), &genset.eta(a, k)}) {
          out.max_error = std::max({out.max_error, dist(*e * c1 * *e, want_x),
                                    dist(*e * c2 * *e, want_y),
                                    dist(*e * c3 * *e, want_y)});
          out.relations += 3;
        }
        out.max_error_uncorrected =
            std::max({out.max_error_uncorrected, dist(c1, want_x),
                      dist(c2, want_y), dist(c3, want_y)});
      }
    }
  }
  // Generators with no shared lattice index commute.
  for (int a = 1; a <= d; ++a)
    for (int j = a + 1; j <= d; ++j)
      for (int b = 1; b <= d; ++b)
        for (int k = b + 1; k <= d; ++k) {
          if (a == b || a == k || j == b || j == k) continue;
          const CMatrix zero = CMatrix::Zero(genset.dim(), genset.dim());
          out.max_error = std::max(
              {out.max_error, dist(commutator(genset.x(a, j), genset.y(b, k)), zero),
               dist(commutator(genset.x(a, j), genset.x(b, k)), zero),
               dist(commutator(genset.y(a, j), genset.y(b, k)), zero)});
          out.relations += 3;
        }
  return out;
}

}  // namespace mpilat
