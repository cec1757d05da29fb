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

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <utility>
#include <vector>

namespace mpilat::testing {

CMatrix taylor_expm(const CMatrix &a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix scaled = a / std::pow(2.0, squarings);
  CMatrix result = CMatrix::Identity(a.rows(), a.cols());
  CMatrix term = result;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

CMatrix gell_mann(int a) {
  const Complex i(0.0, 1.0);
  CMatrix m = CMatrix::Zero(3, 3);
  switch (a) {
    case 1: m(0, 1) = m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -i; m(1, 0) = i; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -i; m(2, 0) = i; break;
    case 6: m(1, 2) = m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -i; m(2, 1) = i; break;
    case 8:
      m(0, 0) = m(1, 1) = 1.0 / std::sqrt(3.0);
      m(2, 2) = -2.0 / std::sqrt(3.0);
      break;
  }
  return m;
}

CMatrix pauli(char which) {
  const Complex i(0.0, 1.0);
  CMatrix m = CMatrix::Zero(2, 2);
  if (which == 'x') m << 0.0, 1.0, 1.0, 0.0;
  if (which == 'y') m << 0.0, -i, i, 0.0;
  if (which == 'z') m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

CMatrix haar_unitary(int d, std::mt19937_64 &rng) {
  std::normal_distribution<double> g(0.0, 1.0 / std::sqrt(2.0));
  CMatrix z(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) z(r, c) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < d; ++c) q.col(c) *= r(c, c) / std::abs(r(c, c));
  return q;
}

CMatrix random_hermitian(int d, std::mt19937_64 &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = Complex(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

namespace {

// The lattice product as a list of factors; a splitter on (j, k) links rows
// j and k, a phase shifter only maps a row onto itself.
std::vector<std::pair<int, int>> splitter_sequence(int d) {
  std::vector<std::pair<int, int>> seq;
  for (int k = d; k >= 1; --k)
    for (int j = k - 1; j >= 1; --j) seq.emplace_back(j, k);
  return seq;
}

std::uint64_t walk(const std::vector<std::pair<int, int>> &seq, std::size_t pos,
                   int row, int target) {
  if (pos == seq.size()) return row == target ? 1 : 0;
  const auto [j, k] = seq[pos];
  if (row != j && row != k) return walk(seq, pos + 1, row, target);
  return walk(seq, pos + 1, j, target) + walk(seq, pos + 1, k, target);
}

}  // namespace

std::uint64_t enumerate_paths(int row, int col, int d) {
  return walk(splitter_sequence(d), 0, row, col);
}

LatticeParams degenerate_params(int d, std::mt19937_64 &rng) {
  LatticeParams p = random_params(d, rng, 0.05, 0.95);
  std::vector<PortPair> nodes;
  for (const auto &[key, v] : p.thetas()) nodes.push_back(key);
  if (nodes.empty()) return p;
  std::shuffle(nodes.begin(), nodes.end(), rng);
  std::uniform_int_distribution<int> count(1, 4);
  std::bernoulli_distribution reflect(0.5);
  const std::size_t forced = std::min<std::size_t>(nodes.size(), count(rng));
  for (std::size_t i = 0; i < forced; ++i)
    p.set_theta(nodes[i].first, nodes[i].second, reflect(rng) ? std::numbers::pi : 0.0);
  return p;
}

CMatrix phased_permutation(const std::vector<int> &image, const std::vector<Complex> &phases) {
  const auto n = static_cast<Eigen::Index>(image.size());
  CMatrix p = CMatrix::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) p(image[c], c) = phases[c];
  return p;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace mpilat::testing
