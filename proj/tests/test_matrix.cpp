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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mpilat/errors.hpp"
#include "mpilat/generators.hpp"
#include "mpilat/matrix.hpp"
#include "support/oracles.hpp"

using namespace mpilat;
using mpilat::testing::max_abs_diff;

TEST_CASE("exponential of a zero angle is the identity") {
  const CMatrix u = expm_hermitian(ggm_y(1, 2, 2), 0.0);
  CHECK(max_abs_diff(u, CMatrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("exponential of Y12 at pi is the quarter turn") {
  CMatrix want(2, 2);
  want << 0.0, 1.0, -1.0, 0.0;
  CHECK(max_abs_diff(expm_hermitian(ggm_y(1, 2, 2), std::numbers::pi), want) < 1e-15);
}

TEST_CASE("spin-1 rotation at pi/2 has half corners and a zero centre") {
  const CMatrix u = expm_hermitian(spin_y(3), std::numbers::pi / 2);
  const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
  CMatrix want(3, 3);
  want << c * c, std::sqrt(2.0) * c * s, s * s,
      -std::sqrt(2.0) * c * s, c * c - s * s, std::sqrt(2.0) * c * s,
      s * s, -std::sqrt(2.0) * c * s, c * c;
  CHECK(max_abs_diff(u, want) < 1e-15);
  CHECK(std::abs(u(1, 1)) < 1e-15);
}

TEST_CASE("exponential rejects bad input and names the norm") {
  CMatrix h(2, 2);
  h << 0.0, 1.0, 0.0, 0.0;
  try {
    (void)expm_hermitian(h, 1.0);
    FAIL("expected a precondition error");
  } catch (const PreconditionError &e) {
    CHECK(std::string(e.what()).find("||H - H^dag||_F") != std::string::npos);
  }
  CHECK_THROWS_AS((void)expm_hermitian(CMatrix::Zero(2, 3), 1.0), PreconditionError);
}

TEST_CASE("spectral exponential agrees with the Taylor series") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 20;
    CMatrix h = testing::random_hermitian(d, rng);
    // Scale so that ||theta H||_2 stays at or below 20.
    const double spec_norm = h.operatorNorm();
    const double theta = angle(rng);
    if (spec_norm * std::abs(theta) > 20.0) h *= 20.0 / (spec_norm * std::abs(theta));
    const CMatrix want = testing::taylor_expm(Complex(0.0, theta) * h);
    worst = std::max(worst, max_abs_diff(expm_hermitian(h, theta), want));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("exponential group laws") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    const CMatrix h = testing::random_hermitian(1 + trial % 8, rng);
    const HermitianSpectrum spec(h);
    const double a = angle(rng), b = angle(rng);
    const auto n = h.rows();
    CHECK(max_abs_diff(spec.exp_i(a) * spec.exp_i(-a), CMatrix::Identity(n, n)) < 1e-11);
    CHECK(max_abs_diff(spec.exp_i(a + b), spec.exp_i(a) * spec.exp_i(b)) < 1e-11);
    CHECK(is_unitary(spec.exp_i(a)));
  }
}

TEST_CASE("kron dimensions and identities") {
  CHECK(max_abs_diff(kron(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)),
                     CMatrix::Identity(4, 4)) == 0.0);
  const CMatrix k = kron(CMatrix::Ones(2, 2), CMatrix::Ones(3, 3));
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
}

TEST_CASE("two-particle kron sum exponentiates to the product splitter") {
  const CMatrix sy = spin_y(2);
  const CMatrix i2 = CMatrix::Identity(2, 2);
  const double theta = 0.83;
  const CMatrix u = expm_hermitian(kron(i2, sy) + kron(sy, i2), theta);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CMatrix want(4, 4);
  want << c * c, c * s, c * s, s * s,
      -c * s, c * c, -s * s, c * s,
      -c * s, -s * s, c * c, c * s,
      s * s, -c * s, -c * s, c * c;
  CHECK(max_abs_diff(u, want) < 1e-14);
}

TEST_CASE("direct sums") {
  const CMatrix zero = direct_sum(std::vector<CMatrix>{CMatrix::Zero(1, 1)});
  CHECK(zero.rows() == 1);
  CHECK(zero(0, 0) == Complex(0.0));
  const CMatrix m = direct_sum(std::vector<CMatrix>{spin_y(1), spin_y(2), spin_y(3)});
  CHECK(m.rows() == 6);
  CHECK(max_abs_diff(m.block(1, 1, 2, 2), spin_y(2)) == 0.0);
  CHECK(max_abs_diff(m.block(3, 3, 3, 3), spin_y(3)) == 0.0);
  CHECK(m.block(0, 1, 1, 5).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(direct_sum(std::vector<CMatrix>{CMatrix::Zero(1, 2)}), PreconditionError);
}

TEST_CASE("kron and direct sum preserve hermiticity and unitarity") {
  std::mt19937_64 rng(3);
  const CMatrix a = testing::random_hermitian(3, rng), b = testing::random_hermitian(2, rng);
  CHECK(is_hermitian(kron(a, b), 1e-12));
  CHECK(is_hermitian(direct_sum(std::vector<CMatrix>{a, b}), 1e-12));
  const CMatrix u = testing::haar_unitary(3, rng), v = testing::haar_unitary(2, rng);
  CHECK(is_unitary(kron(u, v)));
  CHECK(is_unitary(direct_sum(std::vector<CMatrix>{u, v})));
}

TEST_CASE("predicates") {
  CHECK(unitarity_defect(CMatrix::Identity(3, 3)) == 0.0);
  CHECK(std::isinf(unitarity_defect(CMatrix::Zero(2, 3))));
  CHECK_FALSE(is_unitary(2.0 * CMatrix::Identity(2, 2)));
  CHECK(is_hermitian(ggm_y(1, 3, 4)));
  CHECK_FALSE(is_hermitian(CMatrix::Identity(2, 2) * Complex(0.0, 1.0)));
  CHECK(is_diagonal(phase_projector(2, 3)));
  CHECK_FALSE(is_diagonal(ggm_x(1, 2, 2)));
}
