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

// Reference matrices and numbers for the two-boson 3-port and two-fermion
// 4-port lattices, the 7-port Fourier lattice and the Wigner d families.

#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "mpilat/generators.hpp"
#include "mpilat/matrix.hpp"
#include "mpilat/particles.hpp"

namespace mpilat::reference {

/// Upper-triangle entries (row, col, v) of an antisymmetric generator:
/// m(row, col) = -i v and m(col, row) = +i v, 1-based.
struct YEntry {
  int row, col;
  double v;
};

inline CMatrix y_from_entries(int dim, const std::vector<YEntry> &entries) {
  CMatrix m = CMatrix::Zero(dim, dim);
  for (const auto &e : entries) {
    m(e.row - 1, e.col - 1) = Complex(0.0, -e.v);
    m(e.col - 1, e.row - 1) = Complex(0.0, e.v);
  }
  return m;
}

/// Permutation sending basis state `from` to image[from - 1], 1-based.
inline CMatrix perm_from_images(const std::vector<int> &image) {
  const auto n = static_cast<Eigen::Index>(image.size());
  CMatrix p = CMatrix::Zero(n, n);
  for (Eigen::Index from = 0; from < n; ++from) p(image[from] - 1, from) = 1.0;
  return p;
}

inline CMatrix diag_of(const std::vector<double> &v) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(v.size()),
                            static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
  return m;
}

/// Y_target = sign * P Y_source P with P = perm(p).
struct Route {
  PortPair target;
  double sign;
  PortPair perm;
  PortPair source;
};

struct GoldenSet {
  ParticleSpec spec;
  int d;
  std::vector<Occupation> states;
  std::vector<int> partition;
  std::map<PortPair, CMatrix> y;
  std::map<PortPair, CMatrix> perm;
  std::vector<CMatrix> e;
  std::vector<Route> routes;
};

inline GoldenSet golden_two_bosons_three_ports() {
  const double r = 1.0 / std::sqrt(2.0);
  GoldenSet g{ParticleSpec::bosons(2), 3, {}, {}, {}, {}, {}, {}};
  g.states = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  g.partition = {1, 2, 3};
  g.y[{2, 3}] = y_from_entries(6, {{2, 3, 0.5}, {4, 5, r}, {5, 6, r}});
  g.y[{1, 3}] = y_from_entries(6, {{1, 3, r}, {2, 5, 0.5}, {3, 6, r}});
  g.y[{1, 2}] = y_from_entries(6, {{1, 2, r}, {2, 4, r}, {3, 5, 0.5}});
  g.perm[{1, 2}] = perm_from_images({4, 2, 5, 1, 3, 6});
  g.perm[{1, 3}] = perm_from_images({6, 5, 3, 4, 2, 1});
  g.perm[{2, 3}] = perm_from_images({1, 3, 2, 6, 5, 4});
  g.e = {diag_of({2, 1, 1, 0, 0, 0}), diag_of({0, 1, 0, 2, 1, 0}),
         diag_of({0, 0, 1, 0, 1, 2})};
  g.routes = {{{1, 3}, 1.0, {1, 2}, {2, 3}}, {{1, 2}, -1.0, {1, 3}, {2, 3}}};
  return g;
}

inline GoldenSet golden_two_fermions_four_ports() {
  GoldenSet g{ParticleSpec::fermions(2), 4, {}, {}, {}, {}, {}, {}};
  g.states = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
              {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  g.partition = {1, 2, 2, 1};
  g.y[{3, 4}] = y_from_entries(6, {{2, 3, 0.5}, {4, 5, 0.5}});
  g.y[{2, 4}] = y_from_entries(6, {{1, 3, 0.5}, {4, 6, 0.5}});
  g.y[{1, 4}] = y_from_entries(6, {{1, 5, 0.5}, {2, 6, 0.5}});
  g.y[{2, 3}] = y_from_entries(6, {{1, 2, 0.5}, {5, 6, 0.5}});
  g.y[{1, 3}] = y_from_entries(6, {{1, 4, 0.5}, {3, 6, 0.5}});
  g.y[{1, 2}] = y_from_entries(6, {{2, 4, 0.5}, {3, 5, 0.5}});
  g.perm[{1, 2}] = perm_from_images({1, 4, 5, 2, 3, 6});
  g.perm[{1, 3}] = perm_from_images({4, 2, 6, 1, 5, 3});
  g.perm[{1, 4}] = perm_from_images({5, 6, 3, 4, 1, 2});
  g.perm[{2, 3}] = perm_from_images({2, 1, 3, 4, 6, 5});
  g.perm[{2, 4}] = perm_from_images({3, 2, 1, 6, 5, 4});
  g.perm[{3, 4}] = perm_from_images({1, 3, 2, 5, 4, 6});
  g.e = {diag_of({1, 1, 1, 0, 0, 0}), diag_of({1, 0, 0, 1, 1, 0}),
         diag_of({0, 1, 0, 1, 0, 1}), diag_of({0, 0, 1, 0, 1, 1})};
  g.routes = {
      {{2, 4}, 1.0, {2, 3}, {3, 4}},  {{1, 4}, 1.0, {1, 3}, {3, 4}},
      {{1, 4}, 1.0, {1, 2}, {2, 4}},  {{2, 3}, -1.0, {2, 4}, {3, 4}},
      {{2, 3}, 1.0, {3, 4}, {2, 4}},  {{1, 3}, -1.0, {1, 4}, {3, 4}},
      {{1, 3}, 1.0, {3, 4}, {1, 4}},  {{1, 3}, 1.0, {1, 2}, {2, 3}},
      {{1, 2}, -1.0, {1, 4}, {2, 4}}, {{1, 2}, 1.0, {2, 4}, {1, 4}},
      {{1, 2}, -1.0, {1, 3}, {2, 3}}, {{1, 2}, 1.0, {2, 3}, {1, 3}},
  };
  return g;
}

/// Reflectivities and phases of the 7-port Fourier lattice, printed to three
/// decimals (exact fractions where they are exact).
struct FourierReference {
  std::map<PortPair, double> r;
  std::map<PortPair, double> phi;
};

inline FourierReference fourier7_reference() {
  FourierReference f;
  f.r = {{{1, 7}, 0.143}, {{2, 7}, 0.167}, {{3, 7}, 0.2},   {{4, 7}, 0.25},
         {{5, 7}, 0.333}, {{6, 7}, 0.5},   {{2, 6}, 0.254}, {{3, 6}, 0.371},
         {{4, 6}, 0.519}, {{5, 6}, 0.714}, {{3, 5}, 0.565}, {{4, 5}, 0.771}};
  // Symmetric partners R_{j,k} = R_{8-k,8-j}.
  f.r[{1, 6}] = f.r[{2, 7}];
  f.r[{1, 5}] = f.r[{3, 7}];
  f.r[{2, 5}] = f.r[{3, 6}];
  f.r[{1, 4}] = f.r[{4, 7}];
  f.r[{2, 4}] = f.r[{4, 6}];
  f.r[{3, 4}] = f.r[{4, 5}];
  f.r[{1, 3}] = f.r[{5, 7}];
  f.r[{2, 3}] = f.r[{5, 6}];
  f.r[{1, 2}] = f.r[{6, 7}];
  f.phi = {{{2, 7}, 5.386}, {{3, 7}, 4.488}, {{4, 7}, 3.590}, {{5, 7}, 2.693},
           {{6, 7}, 1.795}, {{7, 7}, 0.898}, {{2, 6}, 5.503}, {{3, 6}, 4.802},
           {{4, 6}, 4.150}, {{5, 6}, 3.525}, {{6, 6}, 2.917}, {{2, 5}, 5.582},
           {{3, 5}, 4.939}, {{4, 5}, 4.300}, {{5, 5}, 3.656}, {{2, 4}, 5.630},
           {{3, 4}, 4.992}, {{4, 4}, 4.341}, {{2, 3}, 5.659}, {{3, 3}, 5.014},
           {{2, 2}, 5.675}};
  for (int k = 1; k <= 7; ++k) f.phi[{1, k}] = 0.0;
  return f;
}

/// Closed-form reflectivities of the Wigner d_s(theta) lattice as functions
/// of t = sin^2(theta/2), completed by R_{j,k} = R_{d+1-k,d+1-j}.
inline std::map<PortPair, std::function<double(double)>> wigner_reflectivities(int dim) {
  std::map<PortPair, std::function<double(double)>> r;
  switch (dim) {
    case 2:
      r[{1, 2}] = [](double t) { return t; };
      break;
    case 3:
      r[{1, 3}] = [](double t) { return t * t; };
      r[{2, 3}] = [](double t) { return 2 * t / (t + 1); };
      break;
    case 4:
      r[{1, 4}] = [](double t) { return t * t * t; };
      r[{2, 4}] = [](double t) { return 3 * t * t / (t * t + t + 1); };
      r[{3, 4}] = [](double t) { return 3 * t / (2 * t + 1); };
      r[{2, 3}] = [](double t) { return t * (t + 2) * (t + 2) / ((2 * t + 1) * (2 * t + 1)); };
      break;
    case 5:
      r[{1, 5}] = [](double t) { return t * t * t * t; };
      r[{2, 5}] = [](double t) { return 4 * t * t * t / (t * t * t + t * t + t + 1); };
      r[{3, 5}] = [](double t) { return 6 * t * t / (3 * t * t + 2 * t + 1); };
      r[{4, 5}] = [](double t) { return 4 * t / (3 * t + 1); };
      r[{2, 4}] = [](double t) {
        const double a = t * t + 2 * t + 3, b = 3 * t * t + 2 * t + 1;
        return t * t * a * a / (b * b);
      };
      r[{3, 4}] = [](double t) {
        return 6 * t * (t + 1) * (t + 1) / ((3 * t + 1) * (t * t + 4 * t + 1));
      };
      break;
    default:
      break;
  }
  std::map<PortPair, std::function<double(double)>> full = r;
  for (const auto &[key, f] : r) full.emplace(PortPair{dim + 1 - key.second, dim + 1 - key.first}, f);
  return full;
}

}  // namespace mpilat::reference
