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

#include "esdlab/adiabatic.hpp"
#include "esdlab/error.hpp"
#include "esdlab/markov.hpp"

namespace esdlab {
namespace {

// < exp(i (c X + s^2 X^2 / (2 Omega)) t) > over X ~ N(0, sigma^2), by
// composite Simpson quadrature on [-12 sigma, 12 sigma].
Complex quadrature_coherence(double t, const AdiabaticParams& p) {
  const double c = std::cos(p.theta), s = std::sin(p.theta);
  const int n = 400000;
  const double lo = -12.0 * p.sigma, h = 24.0 * p.sigma / n;
  Complex sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double x = lo + k * h;
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    const double density = std::exp(-0.5 * x * x / (p.sigma * p.sigma));
    sum += w * density * std::exp(Complex(0.0, (c * x + s * s * x * x / (2.0 * p.omega)) * t));
  }
  return sum * h / 3.0 / (p.sigma * std::sqrt(2.0 * std::numbers::pi));
}

AdiabaticParams params(double theta, double sigma_over_omega = 0.02) {
  AdiabaticParams p;
  p.theta = theta;
  p.sigma = sigma_over_omega * p.omega;
  return p;
}

TEST(SpaCoherence, MatchesQuadrature) {
  for (double theta : {std::numbers::pi / 2, 0.0, std::numbers::pi / 3, 1.2}) {
    const AdiabaticParams p = params(theta);
    for (double wt : {0.0, 10.0, 300.0, 2000.0, 2e4}) {
      const double t = wt / p.omega;
      const Complex ref = quadrature_coherence(t, p);
      EXPECT_NEAR(std::abs(spa_coherence(t, p) - ref), 0.0, 1e-8) << theta << " " << wt;
      EXPECT_NEAR(spa_coherence_modulus(t, p), std::abs(ref), 1e-8);
    }
  }
}

TEST(SpaCoherence, LimitingForms) {
  // theta = pi/2: |z| = (1 + (sigma^2 t / Omega)^2)^(-1/4)
  const AdiabaticParams opt = params(std::numbers::pi / 2);
  const double t = 3e4 / opt.omega;
  const double y = opt.sigma * opt.sigma * t / opt.omega;
  EXPECT_NEAR(spa_coherence_modulus(t, opt), std::pow(1.0 + y * y, -0.25), 1e-15);
  // theta = 0: Gaussian decay exp(-(sigma t)^2 / 2)
  const AdiabaticParams lon = params(0.0);
  const double t0 = 50.0 / lon.omega;
  EXPECT_NEAR(spa_coherence_modulus(t0, lon), std::exp(-0.5 * std::pow(lon.sigma * t0, 2)), 1e-15);
  EXPECT_EQ(spa_coherence(0.0, opt), Complex(1.0));
}

TEST(AdiabaticWitness, MatchesComposedMapsForBothFlavors) {
  AdiabaticParams qa = params(std::numbers::pi / 2);
  AdiabaticParams qb = params(1.1, 0.03);
  qb.omega = 1.2e11;
  for (BellFlavor f : {BellFlavor::kPhi, BellFlavor::kPsi})
    for (double r : {0.6, 0.95, 1.0})
      for (double a2 : {0.2, 0.5}) {
        const EWLParams st = ewl_params(r, a2, f, 0.4);
        for (double wt : {0.0, 500.0, 4000.0, 3e4}) {
          const double t = wt / qa.omega;
          const DensityMatrix4 rho = evolve_two_qubit(t, ewl_state(st), qa, qb, std::nullopt);
          EXPECT_NEAR(adiabatic_concurrence(t, qa, qb, st), wootters_concurrence(rho), 1e-12);
          EXPECT_NEAR(adiabatic_concurrence(t, qa, qb, st), xstate_concurrence(rho), 1e-14);
        }
      }
}

TEST(AdiabaticWitness, FlavorIndependent) {
  const AdiabaticParams p = params(0.7);
  for (double wt : {0.0, 1e3, 1e4}) {
    const double t = wt / p.omega;
    EXPECT_EQ(adiabatic_witness(t, p, p, ewl_params(0.9, 0.4, BellFlavor::kPhi)),
              adiabatic_witness(t, p, p, ewl_params(0.9, 0.4, BellFlavor::kPsi)));
  }
}

TEST(EsdClosedForm, OptimalPoint) {
  const double omega = 1e11, sigma = 2e9;
  const EWLParams st = ewl_params(0.9, 0.5, BellFlavor::kPsi);
  const EsdTime t = esd_time_optimal(st, sigma, omega);
  ASSERT_EQ(t.kind(), EsdTime::Kind::kFinite);
  // (Omega / sigma)^2 sqrt(16 |ab|^2 r^2 / (1 - r)^2 - 1) in units of 1/Omega
  EXPECT_NEAR(t.seconds() * omega, 2500.0 * std::sqrt(4.0 * 0.81 / 0.01 - 1.0), 1e-8);
  AdiabaticParams p;
  p.sigma = sigma;
  EXPECT_NEAR(adiabatic_witness(t.seconds(), p, p, st), 0.0, 1e-14);
}

TEST(EsdClosedForm, LongitudinalPoint) {
  const double sigma = 2e9;
  const EWLParams st = ewl_params(0.8, 0.3, BellFlavor::kPhi);
  const EsdTime t = esd_time_dephasing(st, sigma);
  ASSERT_TRUE(t.is_finite());
  AdiabaticParams p = params(0.0);
  EXPECT_NEAR(adiabatic_witness(t.seconds(), p, p, st), 0.0, 1e-14);
}

TEST(EsdClosedForm, Tags) {
  EXPECT_TRUE(esd_time_optimal(ewl_params(1.0, 0.5, BellFlavor::kPsi), 2e9, 1e11).is_infinite());
  EXPECT_TRUE(esd_time_dephasing(ewl_params(1.0, 0.5, BellFlavor::kPsi), 2e9).is_infinite());
  EXPECT_TRUE(esd_time_optimal(ewl_params(0.9, 0.5, BellFlavor::kPsi), 0.0, 1e11).is_infinite());
  const EsdTime never = esd_time_optimal(ewl_params(0.3, 0.5, BellFlavor::kPsi), 2e9, 1e11);
  EXPECT_TRUE(never.never_entangled_flag());
  EXPECT_EQ(never.seconds(), 0.0);
  EXPECT_TRUE(esd_time_dephasing(ewl_params(0.9, 0.0, BellFlavor::kPsi), 2e9).never_entangled_flag());
}

TEST(AdiabaticParamsTest, Validation) {
  AdiabaticParams p;
  EXPECT_NO_THROW(p.validate());
  p.omega = 0.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = AdiabaticParams{};
  p.sigma = -1.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = AdiabaticParams{};
  p.gamma_min = 2e6;
  EXPECT_THROW(p.validate(), ParameterError);
  p = AdiabaticParams{};
  p.sigma = 0.3 * p.omega;
  EXPECT_TRUE(p.outside_spa_regime());
  EXPECT_FALSE(AdiabaticParams{}.outside_spa_regime());
}

}  // namespace
}  // namespace esdlab
