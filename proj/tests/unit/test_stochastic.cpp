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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "esdlab/adiabatic.hpp"
#include "esdlab/constants.hpp"
#include "esdlab/error.hpp"
#include "esdlab/stochastic.hpp"

namespace esdlab {
namespace {

constexpr double kOmega = 1e11;

TEST(Ensemble, KolmogorovSmirnovOnLogRates) {
  const auto ens = sample_ensemble(100000, 1.0, 1e6, 2e9, 42);
  std::vector<double> u(ens.size());
  const double l = std::log(1e6);
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = std::log(ens.rates[j]) / l;
  std::sort(u.begin(), u.end());
  double d = 0.0;
  const double n = static_cast<double>(u.size());
  for (std::size_t j = 0; j < u.size(); ++j)
    d = std::max({d, (j + 1) / n - u[j], u[j] - j / n});
  EXPECT_LT(d, 0.01);
}

TEST(Ensemble, MarginalOfRatesIsLogUniform) {
  // The stratification must not bias any single rate: pool index 0 over seeds.
  std::vector<double> u;
  for (std::uint64_t seed = 0; seed < 4000; ++seed)
    u.push_back(std::log(sample_ensemble(8, 1.0, 1e6, 1.0, seed).rates[0]) / std::log(1e6));
  std::sort(u.begin(), u.end());
  double d = 0.0;
  const double n = static_cast<double>(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) d = std::max({d, (j + 1) / n - u[j], u[j] - j / n});
  EXPECT_LT(d, 1.63 / std::sqrt(n));  // 1% KS critical value
}

TEST(Ensemble, CouplingsSignsAndDeterminism) {
  const auto a = sample_ensemble(250, 1.0, 1e6, 2e9, 7);
  const auto b = sample_ensemble(250, 1.0, 1e6, 2e9, 7);
  EXPECT_EQ(a.rates, b.rates);
  EXPECT_EQ(a.initial_states, b.initial_states);
  EXPECT_NEAR(a.total_variance(), 4e18, 4e18 * 1e-9);
  for (double g : a.rates) {
    EXPECT_GE(g, 1.0);
    EXPECT_LE(g, 1e6);
  }
  const auto one = sample_ensemble(1, 1.0, 1e6, 3.0, 1);
  EXPECT_EQ(one.couplings[0], 3.0);
  const int plus = static_cast<int>(std::count(a.initial_states.begin(), a.initial_states.end(), 1));
  EXPECT_GT(plus, 90);
  EXPECT_LT(plus, 160);
  EXPECT_NE(sample_ensemble(250, 1.0, 1e6, 2e9, 8).rates, a.rates);
}

TEST(Ensemble, InvalidBand) {
  EXPECT_THROW(sample_ensemble(10, 0.0, 1e6, 1.0, 1), ParameterError);
  EXPECT_THROW(sample_ensemble(10, 1e6, 1.0, 1.0, 1), ParameterError);
  EXPECT_THROW(sample_ensemble(0, 1.0, 1e6, 1.0, 1), ParameterError);
}

FluctuatorEnsemble single(double rate, double v) {
  FluctuatorEnsemble e;
  e.rates = {rate};
  e.couplings = {v};
  e.initial_states = {1};
  e.gamma_min = rate / 10;
  e.gamma_max = rate * 10;
  return e;
}

TEST(RtnPaths, PoissonSwitchCounts) {
  const FluctuatorEnsemble e = single(1e4, 1.0);
  const double t_max = 1e-3;
  double total = 0.0;
  const int n = 1000;
  for (int k = 0; k < n; ++k) total += static_cast<double>(rtn_paths(e, t_max, k).switch_times[0].size());
  const double expected = 1e4 * t_max * n;
  EXPECT_NEAR(total, expected, 3.0 * std::sqrt(expected));
}

TEST(RtnPaths, AutocorrelationDecaysAtTwiceTheRate) {
  const double gamma = 1e3, t_max = 1e-2;
  const FluctuatorEnsemble e = single(gamma, 1.0);
  const std::vector<double> lags = {1e-4, 2e-4, 4e-4, 6e-4, 8e-4};
  std::vector<double> corr(lags.size(), 0.0);
  const int n = 1000, probes = 50;
  for (int k = 0; k < n; ++k) {
    const NoiseTrace x = noise_trace(e, rtn_paths(e, t_max, 1000 + k, InitialStates::kResample));
    for (int p = 0; p < probes; ++p) {
      const double t0 = p * 1.5e-4;
      for (std::size_t i = 0; i < lags.size(); ++i) corr[i] += x.value_at(t0) * x.value_at(t0 + lags[i]);
    }
  }
  // ln C(tau) = -kappa tau, least squares through the origin
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lags.size(); ++i) {
    const double c = corr[i] / (n * probes);
    num += lags[i] * -std::log(c);
    den += lags[i] * lags[i];
  }
  EXPECT_NEAR(num / den, 2.0 * gamma, 0.1 * 2.0 * gamma);
}

TEST(RtnPaths, DeterminismAndEmptyEnsemble) {
  const auto ens = sample_ensemble(50, 1.0, 1e6, 1.0, 3);
  EXPECT_EQ(rtn_paths(ens, 1e-4, 9).switch_times, rtn_paths(ens, 1e-4, 9).switch_times);
  FluctuatorEnsemble empty;
  const NoiseTrace x = noise_trace(empty, rtn_paths(empty, 1.0, 1));
  EXPECT_EQ(x.values, std::vector<double>{0.0});
  EXPECT_EQ(x.value_at(0.5), 0.0);
}

TEST(NoiseTraceTest, PiecewiseConstantSum) {
  FluctuatorEnsemble e;
  e.rates = {1.0, 1.0};
  e.couplings = {1.0, 10.0};
  e.initial_states = {1, -1};
  e.gamma_min = 0.5;
  e.gamma_max = 2.0;
  RtnPaths p;
  p.t_max = 3.0;
  p.initial_states = {1, -1};
  p.switch_times = {{0.5, 2.0}, {1.0}};
  const NoiseTrace x = noise_trace(e, p);
  EXPECT_EQ(x.value_at(0.1), -9.0);
  EXPECT_EQ(x.value_at(0.7), -11.0);
  EXPECT_EQ(x.value_at(1.5), 9.0);
  EXPECT_EQ(x.value_at(2.5), 11.0);
}

TEST(Psd, SingleFluctuatorLorentzian) {
  const double gamma = 1e3, v = 2.0;
  const FluctuatorEnsemble e = single(gamma, v);
  PsdOptions opt;
  opt.omega_min = 2e2;
  opt.omega_max = 2e4;
  const PowerSpectrum ps = psd_estimate(e, psd_min_record(opt.omega_min), 400, 5, opt);
  ASSERT_GT(ps.omega.size(), 10u);
  for (std::size_t k = 0; k < ps.omega.size(); ++k) {
    const double w = ps.omega[k];
    const double lorentz = v * v * 4.0 * gamma / (4.0 * gamma * gamma + w * w);
    EXPECT_NEAR(ps.s_estimated[k] / lorentz, 1.0, 0.15) << w;
  }
}

TEST(Psd, OneOverFAndVarianceScaling) {
  const auto ens = sample_ensemble(250, 1.0, 1e6, 2e9, 7);
  PsdOptions opt;
  opt.omega_min = 1e2;
  opt.omega_max = 1e4;
  const PowerSpectrum ps = psd_estimate(ens, psd_min_record(1e2), 100, 3, opt);
  const PowerLawFit fit = fit_power_law(ps, 1e2, 1e4);
  EXPECT_NEAR(fit.slope, -1.0, 0.1);
  EXPECT_NEAR(fit.amplitude_ratio, 1.0, 0.2);

  FluctuatorEnsemble doubled = ens;
  for (double& v : doubled.couplings) v *= 2.0;
  const PowerSpectrum ps2 = psd_estimate(doubled, psd_min_record(1e2), 100, 3, opt);
  for (std::size_t k = 0; k < ps.omega.size(); ++k) {
    EXPECT_NEAR(ps2.s_estimated[k] / ps.s_estimated[k], 4.0, 1e-9);
    EXPECT_NEAR(ps2.s_target[k] / ps.s_target[k], 4.0, 1e-12);
  }
}

TEST(Psd, Preconditions) {
  const auto ens = sample_ensemble(10, 1.0, 1e6, 1.0, 1);
  EXPECT_THROW(psd_estimate(ens, 10.0, 99, 1), ParameterError);
  PsdOptions narrow;
  narrow.omega_min = 100.0;
  narrow.omega_max = 500.0;
  EXPECT_THROW(psd_estimate(ens, 10.0, 100, 1, narrow), ParameterError);
  EXPECT_THROW(psd_estimate(ens, 1e-3, 100, 1), ParameterError);
  const auto tight = sample_ensemble(10, 1.0, 50.0, 1.0, 1);
  EXPECT_THROW(psd_estimate(tight, 10.0, 100, 1), ParameterError);
}

TEST(Psd, WorkerCountDoesNotChangeResult) {
  const auto ens = sample_ensemble(20, 1.0, 1e4, 1.0, 2);
  PsdOptions one, four;
  one.workers = 1;
  four.workers = 4;
  const auto a = psd_estimate(ens, psd_min_record(10.0), 128, 4, one);
  const auto b = psd_estimate(ens, psd_min_record(10.0), 128, 4, four);
  EXPECT_EQ(a.s_estimated, b.s_estimated);
}

SimConfig short_config() {
  SimConfig cfg;
  cfg.n_trajectories = 64;
  cfg.t_max = 2e3 / kOmega;
  cfg.n_samples = 21;
  cfg.n_fluctuators = 40;
  return cfg;
}

NoiseTrace constant_trace(double x) { return NoiseTrace{{0.0}, {x}}; }

TEST(Trajectory, FreeEvolution) {
  SimConfig cfg = short_config();
  const DensityMatrix4 rho0 = ewl_state(ewl_params(0.9, 0.3, BellFlavor::kPhi));
  const Trajectory tr = evolve_trajectory(rho0, constant_trace(0.0), constant_trace(0.0), cfg);
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const Matrix4& rho = tr.states[k];
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(rho(i, i).real(), rho0(i, i).real(), 1e-14);
    // <01|rho|10>: qubit A coherence rho_01 times conj of qubit B's
    // (rho_01 ~ e^{+i Omega t} per qubit), so resonant qubits leave it fixed.
    EXPECT_NEAR(std::abs(rho(1, 2) - rho0(1, 2)), 0.0, 1e-10);
    // <00|rho|11> picks up e^{+2 i Omega t}
    EXPECT_NEAR(std::abs(rho(0, 3) - rho0(0, 3) * std::polar(1.0, 2.0 * kOmega * tr.times[k])), 0.0, 1e-10);
    EXPECT_LT(tr.unitarity_defect, tol::kUnitarity);
  }
}

TEST(Trajectory, LongitudinalNoiseKeepsPopulations) {
  SimConfig cfg = short_config();
  cfg.qubit_a.theta = cfg.qubit_b.theta = 0.0;
  const auto ens = simulation_ensemble(cfg, 0);
  const DensityMatrix4 rho0 = ewl_state(ewl_params(0.8, 0.4, BellFlavor::kPsi));
  for (int k = 0; k < 10; ++k) {
    const NoiseTrace xa = noise_trace(ens, rtn_paths(ens, cfg.t_max, 2 * k, InitialStates::kResample));
    const NoiseTrace xb = noise_trace(ens, rtn_paths(ens, cfg.t_max, 2 * k + 1, InitialStates::kResample));
    const Trajectory tr = evolve_trajectory(rho0, xa, xb, cfg);
    for (const Matrix4& rho : tr.states)
      for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(rho(i, i).real(), rho0(i, i).real(), 1e-13);
  }
}

TEST(Trajectory, CoupledPropagatorMatchesDirectExponential) {
  SimConfig cfg = short_config();
  cfg.coupling_g = 1e9;
  cfg.qubit_b.omega = 1.2e11;
  const DensityMatrix4 rho0 = ewl_state(ewl_params(1.0, 0.5, BellFlavor::kPsi));
  const double xa = 1.5e9, xb = -0.7e9;
  const Trajectory tr = evolve_trajectory(rho0, constant_trace(xa), constant_trace(xb), cfg);
  // Lab-frame H = sum_alpha -(1/2)(Omega (sin th sx + cos th sz) + X sz) - (g/2) sz sz,
  // rotated into the eigenbasis of the static part.
  auto lab = [](const AdiabaticParams& p, double x) {
    return Complex(-0.5) * (Complex(p.omega * std::sin(p.theta)) * pauli_x() +
                            Complex(p.omega * std::cos(p.theta) + x) * pauli_z());
  };
  // Static eigenbasis: |0> = (cos th/2, sin th/2) with energy -Omega/2, |1> = (-sin th/2, cos th/2).
  auto basis = [](const AdiabaticParams& p) {
    Matrix2 v;
    v(0, 0) = std::cos(0.5 * p.theta);
    v(1, 0) = std::sin(0.5 * p.theta);
    v(0, 1) = -std::sin(0.5 * p.theta);
    v(1, 1) = std::cos(0.5 * p.theta);
    return v;
  };
  const Matrix4 v = kron(basis(cfg.qubit_a), basis(cfg.qubit_b));
  const Matrix4 h_lab = kron(lab(cfg.qubit_a, xa), Matrix2::identity()) + kron(Matrix2::identity(), lab(cfg.qubit_b, xb)) +
                        Complex(-0.5 * cfg.coupling_g) * kron(pauli_z(), pauli_z());
  const Matrix4 h = v.adjoint() * h_lab * v;
  for (std::size_t k = 0; k < tr.times.size(); k += 5) {
    const Matrix4 u = unitary_exponential(h, tr.times[k]);
    EXPECT_LT(max_abs_difference(tr.states[k], u * rho0.matrix() * u.adjoint()), 1e-8);
  }
}

TEST(MonteCarlo, NoNoiseKeepsInitialConcurrence) {
  SimConfig cfg = short_config();
  cfg.n_trajectories = 1;
  cfg.qubit_a.sigma = cfg.qubit_b.sigma = 0.0;
  const EWLParams st = ewl_params(0.9, 0.5, BellFlavor::kPhi);
  const MonteCarloResult r = monte_carlo_concurrence(ewl_state(st), cfg);
  for (double c : r.curve.values) EXPECT_NEAR(c, ewl_initial_concurrence(st), 1e-10);
}

TEST(MonteCarlo, DeterministicAcrossWorkerCounts) {
  SimConfig cfg = short_config();
  const DensityMatrix4 rho0 = ewl_state(ewl_params(1.0, 0.5, BellFlavor::kPsi));
  cfg.workers = 1;
  const MonteCarloResult a = monte_carlo_concurrence(rho0, cfg);
  cfg.workers = 3;
  const MonteCarloResult b = monte_carlo_concurrence(rho0, cfg);
  EXPECT_EQ(a.curve.values, b.curve.values);
  EXPECT_EQ(a.curve.stderr_values, b.curve.stderr_values);
  cfg.seed = 2;
  EXPECT_NE(monte_carlo_concurrence(rho0, cfg).curve.values, a.curve.values);
}

TEST(MonteCarlo, AveragedStatesAreValid) {
  SimConfig cfg = short_config();
  cfg.coupling_g = 1e9;
  const MonteCarloResult r = monte_carlo_concurrence(ewl_state(ewl_params(0.95, 0.5, BellFlavor::kPsi)), cfg);
  EXPECT_LT(r.max_unitarity_defect, tol::kUnitarity);
  for (const auto& rho : r.mean_states) {
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_LT(hermiticity_defect(rho.matrix()), 1e-12);
  }
  EXPECT_NO_THROW(r.curve.validate());
}

TEST(MonteCarlo, LongitudinalNoiseMatchesStaticPath) {
  SimConfig cfg = short_config();
  cfg.qubit_a.theta = cfg.qubit_b.theta = 0.0;
  cfg.qubit_a.sigma = cfg.qubit_b.sigma = 2e7;  // sigma t <= 2 over the window
  cfg.n_trajectories = 4000;
  cfg.n_fluctuators = 250;
  cfg.t_max = 1e4 / kOmega;
  const EWLParams st = ewl_params(1.0, 0.5, BellFlavor::kPsi);
  const MonteCarloResult r = monte_carlo_concurrence(ewl_state(st), cfg);
  for (std::size_t k = 0; k < r.curve.times.size(); ++k) {
    const double spa = adiabatic_concurrence(r.curve.times[k], cfg.qubit_a, cfg.qubit_b, st);
    EXPECT_NEAR(r.curve.values[k], spa, std::max(4.0 * r.curve.stderr_values[k], 0.01)) << k;
  }
}

TEST(MonteCarlo, RejectsQuantumNoise) {
  SimConfig cfg = short_config();
  cfg.quantum = QuantumNoiseParams{};
  EXPECT_THROW(monte_carlo_concurrence(ewl_state(EWLParams{}), cfg), ParameterError);
  SimConfig bad = short_config();
  bad.n_samples = 1;
  EXPECT_THROW(bad.validate(), ParameterError);
}

}  // namespace
}  // namespace esdlab
