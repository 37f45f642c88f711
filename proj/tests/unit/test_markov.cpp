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

#include <cmath>
#include <numbers>
#include <random>

#include "esdlab/constants.hpp"
#include "esdlab/error.hpp"
#include "esdlab/markov.hpp"
#include "oracles.hpp"

namespace esdlab {
namespace {

AdiabaticParams optimal() { return AdiabaticParams{}; }

TEST(QuantumNoise, RelaxationTimes) {
  const QuantumNoiseParams q;
  EXPECT_DOUBLE_EQ(q.t1(), 1e-6);
  EXPECT_DOUBLE_EQ(q.t2(), 2e-6);
  EXPECT_TRUE(std::isinf(QuantumNoiseParams{0.0, 0.04}.t1()));
  EXPECT_THROW((QuantumNoiseParams{-1.0, 0.04}.validate()), ParameterError);
  EXPECT_THROW((QuantumNoiseParams{1.0, 0.0}.validate()), ParameterError);
}

TEST(Gibbs, DetailedBalance) {
  for (double temp : {0.01, 0.04, 1.0, 300.0}) {
    const auto g = gibbs_populations(1e11, temp);
    EXPECT_NEAR(g.p0_inf + g.p1_inf, 1.0, 1e-15);
    const double boltzmann = std::exp(-phys::kHbar * 1e11 / (phys::kBoltzmann * temp));
    EXPECT_NEAR(g.p1_inf / g.p0_inf, boltzmann, 1e-12 * std::max(boltzmann, 1e-300));
  }
  // T = 0.04 K, Omega = 1e11 rad/s
  EXPECT_NEAR(gibbs_populations(1e11, 0.04).p1_inf, 5.0920698e-9, 1e-15);
}

TEST(SingleQubitMapMarkov, PopulationsAndCoherence) {
  const AdiabaticParams p = optimal();
  const QuantumNoiseParams q;
  const auto gibbs = gibbs_populations(p.omega, q.temperature);
  Matrix2 rho0;
  rho0(0, 0) = 0.2;
  rho0(1, 1) = 0.8;
  rho0(0, 1) = Complex(0.3, 0.1);
  rho0(1, 0) = Complex(0.3, -0.1);
  for (double t : {0.0, 1e-8, 5e-7, 3e-6}) {
    const SingleQubitMap m = single_qubit_map(t, p, q);
    EXPECT_NO_THROW(m.validate());
    const Matrix2 rho = m.apply(rho0);
    const double g = std::exp(-t / q.t1());
    EXPECT_NEAR(rho(1, 1).real(), 0.8 * g + gibbs.p1_inf * (1 - g), 1e-15);
    EXPECT_NEAR(rho(0, 0).real(), 0.2 * g + gibbs.p0_inf * (1 - g), 1e-15);
    const Complex expected = rho0(0, 1) * std::polar(1.0, p.omega * t) * spa_coherence(t, p) * std::exp(-t / (2 * q.t1()));
    EXPECT_NEAR(std::abs(rho(0, 1) - expected), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rho(1, 0) - std::conj(expected)), 0.0, 1e-15);
  }
}

TEST(SingleQubitMapMarkov, FreeRotationFollowsHamiltonian) {
  // Without noise the map must agree with exp(-i H t) for H = -(Omega/2) tz.
  AdiabaticParams p = optimal();
  p.sigma = 0.0;
  Matrix2 h;
  h(0, 0) = -0.5 * p.omega;
  h(1, 1) = 0.5 * p.omega;
  Matrix2 rho0;
  rho0(0, 0) = rho0(1, 1) = rho0(0, 1) = rho0(1, 0) = 0.5;
  for (double t : {1e-12, 3.3e-11, 1e-9}) {
    const Matrix2 u = testing::oracle_expm(h, t);
    const Matrix2 ref = u * rho0 * u.adjoint();
    EXPECT_LT(max_abs_difference(adiabatic_map(t, p).apply(rho0), ref), 1e-9);
  }
}

TEST(SingleQubitMapMarkov, LogCrossTermModel) {
  const AdiabaticParams p = optimal();
  const QuantumNoiseParams none{0.0, 0.04};
  const QuantumNoiseParams q;
  for (double t : {1e-8, 1e-7, 1e-6}) {
    // Without relaxation the two models coincide.
    const auto a = single_qubit_map(t, p, none, CoherenceModel::kFactorized);
    const auto b = single_qubit_map(t, p, none, CoherenceModel::kLogCrossTerm);
    EXPECT_NEAR(std::abs(a(0, 1, 0, 1) - b(0, 1, 0, 1)), 0.0, 1e-12);
    // With relaxation the cross term is a small correction.
    const auto c = single_qubit_map(t, p, q, CoherenceModel::kFactorized);
    const auto d = single_qubit_map(t, p, q, CoherenceModel::kLogCrossTerm);
    EXPECT_NEAR(std::abs(c(0, 1, 0, 1)), std::abs(d(0, 1, 0, 1)), 1e-5);
    EXPECT_NO_THROW(d.validate());
  }
}

TEST(Compose, ProducesValidStatesAndRelaxesToGibbs) {
  std::mt19937_64 rng(4);
  const AdiabaticParams pa = optimal();
  AdiabaticParams pb = optimal();
  pb.omega = 1.2e11;
  const QuantumNoiseParams q{2e6, 0.5};
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix4 rho0(testing::random_density(rng));
    for (double t : {0.0, 1e-9, 1e-7, 1e-6}) {
      const DensityMatrix4 rho = evolve_two_qubit(t, rho0, pa, pb, q);
      EXPECT_LT(hermiticity_defect(rho.matrix()), tol::kHermiticity);
      EXPECT_NEAR(rho.matrix().trace().real(), 1.0, tol::kTrace);
      const double c = wootters_concurrence(rho);
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 1.0);
    }
    const DensityMatrix4 late = evolve_two_qubit(1e-3, rho0, pa, pb, q);
    const auto ga = gibbs_populations(pa.omega, q.temperature);
    const auto gb = gibbs_populations(pb.omega, q.temperature);
    EXPECT_NEAR(late(0, 0).real(), ga.p0_inf * gb.p0_inf, 1e-12);
    EXPECT_NEAR(late(3, 3).real(), ga.p1_inf * gb.p1_inf, 1e-12);
    EXPECT_NEAR(std::abs(late(1, 2)), 0.0, 1e-12);
  }
}

TEST(Compose, IdentityMapsLeaveStateUnchanged) {
  std::mt19937_64 rng(8);
  const DensityMatrix4 rho0(testing::random_density(rng));
  const DensityMatrix4 rho = compose_two_qubit(rho0, SingleQubitMap::identity(), SingleQubitMap::identity());
  EXPECT_EQ(rho.matrix(), rho0.matrix());
}

TEST(BellClosedForms, EqualComposedPipeline) {
  const AdiabaticParams p = optimal();
  for (double temp : {0.04, 2.0}) {
    const QuantumNoiseParams q{2e6, temp};
    for (BellFlavor f : {BellFlavor::kPhi, BellFlavor::kPsi}) {
      const DensityMatrix4 rho0 = ewl_state(ewl_params(1.0, 0.5, f));
      for (int k = 0; k < 200; ++k) {
        const double t = 4e-6 * k / 199.0;
        const double pipeline = xstate_concurrence(evolve_two_qubit(t, rho0, p, p, q));
        EXPECT_NEAR(interplay_concurrence_bell(t, f, p, q), pipeline, 1e-12) << k;
      }
    }
  }
}

TEST(BellClosedForms, RequireOptimalPoint) {
  AdiabaticParams p = optimal();
  p.theta = 1.0;
  EXPECT_THROW(interplay_witness_bell(1e-8, BellFlavor::kPhi, p, QuantumNoiseParams{}), ParameterError);
}

TEST(BellClosedForms, FiniteTimeDeathAtBellPurity) {
  const AdiabaticParams p = optimal();
  const QuantumNoiseParams q;
  for (BellFlavor f : {BellFlavor::kPhi, BellFlavor::kPsi}) {
    EXPECT_GT(interplay_witness_bell(0.0, f, p, q), 0.0);
    EXPECT_LT(interplay_witness_bell(1e-2, f, p, q), 0.0);
  }
}

}  // namespace
}  // namespace esdlab
