// Copyright 2026 The esdlab Authors
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

#include <gtest/gtest.h>

#include <random>

#include "esdlab/constants.hpp"
#include "esdlab/error.hpp"
#include "esdlab/qmath.hpp"
#include "oracles.hpp"

namespace esdlab {
namespace {

using testing::oracle_concurrence;
using testing::random_density;

Matrix4 random_hermitian4(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  Matrix4 h;
  for (std::size_t i = 0; i < 4; ++i) {
    h(i, i) = n(rng);
    for (std::size_t j = i + 1; j < 4; ++j) {
      h(i, j) = Complex(n(rng), n(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

TEST(Eigensystem, MatchesEigenOnRandomHermitian) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix4 h = random_hermitian4(rng, trial % 2 ? 1.0 : 1e11);
    const auto mine = hermitian_eigensystem(h);
    const auto ref = testing::oracle_eigenvalues(h);
    double scale = 0.0;
    for (double v : ref) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(mine.values[k], ref[3 - k], 1e-13 * scale);
    // H V = V diag(values)
    Matrix4 d;
    for (std::size_t k = 0; k < 4; ++k) d(k, k) = mine.values[k];
    EXPECT_LT(max_abs_difference(h * mine.vectors, mine.vectors * d), 1e-12 * scale);
    EXPECT_LT(unitarity_defect(mine.vectors), 1e-13);
  }
}

TEST(Eigensystem, DegenerateSpectrum) {
  const Matrix4 id = Matrix4::identity();
  const auto es = hermitian_eigensystem(id);
  for (double v : es.values) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(Eigensystem, RejectsNonHermitian) {
  Matrix4 m = Matrix4::identity();
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigensystem(m), InvariantError);
}

TEST(UnitaryExponential, MatchesEigenOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4 h = random_hermitian4(rng, 1e10);
    const double t = 1e-8 * (trial + 1);
    const Matrix4 u = unitary_exponential(h, t);
    EXPECT_LT(max_abs_difference(u, testing::oracle_expm(h, t)), 1e-9);
    EXPECT_LT(unitarity_defect(u), tol::kUnitarity);
  }
}

TEST(UnitaryExponential, PauliRotation) {
  const double t = 0.37;
  const Matrix2 u = unitary_exponential(pauli_x(), t);
  EXPECT_NEAR(std::abs(u(0, 0) - std::cos(t)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 1) - Complex(0.0, -std::sin(t))), 0.0, 1e-15);
}

TEST(DensityMatrix, ValidatesInvariants) {
  Matrix4 m = Matrix4::identity();
  EXPECT_TRUE(DensityMatrix4::violation(m).has_value());  // trace 4
  m *= 0.25;
  EXPECT_FALSE(DensityMatrix4::violation(m).has_value());
  Matrix4 neg = m;
  neg(0, 0) = 0.75;
  neg(1, 1) = -0.25;
  neg(2, 2) = 0.25;
  neg(3, 3) = 0.25;
  EXPECT_THROW(DensityMatrix4{neg}, InvariantError);
  Matrix4 nh = m;
  nh(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix4{nh}, InvariantError);
}

TEST(Wootters, MatchesOraclesOnRandomStates) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const testing::EFactor a = testing::random_factor(rng, 1 + trial % 4);
    const Matrix4 rho = testing::density_from_factor(a);
    EXPECT_NEAR(wootters_concurrence(DensityMatrix4(rho)), testing::oracle_concurrence_factor(a), 1e-9);
    if (trial % 4 == 3) EXPECT_NEAR(wootters_concurrence(DensityMatrix4(rho)), oracle_concurrence(rho), 1e-9);
  }
}

TEST(Wootters, PureStateClosedForm) {
  // |psi> = alpha|00> + beta|01> + gamma|10> + delta|11>: C = 2|alpha delta - beta gamma|
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    Vector4 v;
    double norm = 0.0;
    for (auto& c : v) {
      c = Complex(n(rng), n(rng));
      norm += std::norm(c);
    }
    for (auto& c : v) c /= std::sqrt(norm);
    const double expected = 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
    EXPECT_NEAR(wootters_concurrence(DensityMatrix4(outer(v))), expected, 1e-10);
  }
}

TEST(Wootters, BellAndProductStates) {
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(wootters_concurrence(DensityMatrix4(outer({s, 0.0, 0.0, s}))), 1.0, 1e-14);
  EXPECT_NEAR(wootters_concurrence(DensityMatrix4(outer({0.0, s, s, 0.0}))), 1.0, 1e-14);
  EXPECT_EQ(wootters_concurrence(DensityMatrix4(outer({1.0, 0.0, 0.0, 0.0}))), 0.0);
  EXPECT_EQ(wootters_concurrence(DensityMatrix4(0.25 * Matrix4::identity())), 0.0);
}

TEST(Wootters, LocalUnitaryInvariance) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix4 rho = random_density(rng, 2);
    const Matrix4 u = kron(testing::random_unitary2(rng), testing::random_unitary2(rng));
    const double c0 = wootters_concurrence(DensityMatrix4(rho));
    Matrix4 rotated = u * rho * u.adjoint();
    rotated = 0.5 * (rotated + rotated.adjoint());
    EXPECT_NEAR(wootters_concurrence(DensityMatrix4(rotated)), c0, 1e-10);
  }
}

TEST(XState, Detection) {
  std::mt19937_64 rng(29);
  const Matrix4 x = testing::random_x_state(rng);
  EXPECT_TRUE(is_x_state(DensityMatrix4(x), 1e-12));
  EXPECT_FALSE(is_x_state(DensityMatrix4(random_density(rng)), 1e-3));
}

TEST(Kron, IndexConvention) {
  Matrix2 a, b;
  a(0, 1) = 1.0;
  b(1, 0) = 1.0;
  const Matrix4 k = kron(a, b);
  // <i j| a (x) b |i' j'> = a_{ii'} b_{jj'}: only (0,1) x (1,0) -> row 1, col 2
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(k(r, c), (r == 1 && c == 2) ? Complex(1.0) : Complex(0.0));
}

TEST(SingleQubitMapTest, IdentityAndValidation) {
  const SingleQubitMap id = SingleQubitMap::identity();
  EXPECT_EQ(id.trace_defect(), 0.0);
  EXPECT_EQ(id.hermiticity_defect(), 0.0);
  EXPECT_NO_THROW(id.validate());
  Matrix2 rho;
  rho(0, 0) = 0.3;
  rho(1, 1) = 0.7;
  rho(0, 1) = Complex(0.1, 0.2);
  rho(1, 0) = Complex(0.1, -0.2);
  EXPECT_EQ(id.apply(rho), rho);

  SingleQubitMap lossy = id;
  lossy(0, 0, 0, 0) = 0.5;
  EXPECT_THROW(lossy.validate(), InvariantError);
  EXPECT_THROW(SingleQubitMap{}.validate(), InvariantError);
}

}  // namespace
}  // namespace esdlab
