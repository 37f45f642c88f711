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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "esdlab/adiabatic.hpp"
#include "esdlab/curve.hpp"
#include "esdlab/markov.hpp"
#include "esdlab/qmath.hpp"

namespace esdlab {

// ---------------------------------------------------------------------------
// Fluctuator ensembles and telegraph paths

/// N symmetric random-telegraph fluctuators. Fluctuator j contributes
/// v_j xi_j(t) to X(t), where xi_j = +-1 flips with rate gamma_j in each
/// direction (autocorrelation exp(-2 gamma_j |tau|)).
struct FluctuatorEnsemble {
  std::vector<double> rates;         // 1/s
  std::vector<double> couplings;     // rad/s
  std::vector<int> initial_states;   // +-1
  double gamma_min = 1.0;
  double gamma_max = 1e6;

  std::size_t size() const { return rates.size(); }
  /// sum_j v_j^2
  double total_variance() const;
  void validate() const;
};

/// Rates log-uniform in [gamma_min, gamma_max), gamma = gamma_min
/// (gamma_max/gamma_min)^u. The n values of u are a randomly permuted
/// stratified sample: each u is uniform on [0, 1) and the set covers the
/// band evenly. Couplings are sigma / sqrt(n); initial signs are
/// equiprobable. Deterministic in `seed`.
FluctuatorEnsemble sample_ensemble(std::size_t n, double gamma_min, double gamma_max, double sigma,
                                   std::uint64_t seed);

enum class InitialStates {
  kFromEnsemble,  // start from ens.initial_states
  kResample,      // draw fresh stationary (+-1 equiprobable) signs
};

/// One realisation of every fluctuator's switching history on [0, t_max).
struct RtnPaths {
  double t_max = 0.0;
  std::vector<int> initial_states;
  std::vector<std::vector<double>> switch_times;  // per fluctuator, ascending
};

/// Poisson switch times with rate gamma_j for each fluctuator.
/// Deterministic in `seed`.
RtnPaths rtn_paths(const FluctuatorEnsemble& ens, double t_max, std::uint64_t seed,
                   InitialStates initial = InitialStates::kFromEnsemble);

/// Piecewise-constant X(t) = sum_j v_j xi_j(t): `values[k]` holds on
/// [times[k], times[k + 1]); times[0] == 0.
struct NoiseTrace {
  std::vector<double> times;
  std::vector<double> values;

  double value_at(double t) const;
};

NoiseTrace noise_trace(const FluctuatorEnsemble& ens, const RtnPaths& paths);

// ---------------------------------------------------------------------------
// Spectral estimation

/// pi sigma^2 / (ln(gamma_max / gamma_min) omega): the two-sided 1/f level
/// produced by log-uniform rates.
double one_over_f_level(double omega, double sigma, double gamma_min, double gamma_max);

struct PsdOptions {
  /// Output band; 0 selects [10 gamma_min, gamma_max / 10].
  double omega_min = 0.0;
  double omega_max = 0.0;
  int bins_per_decade = 10;
  /// Samples per record. Spans overlap by nothing: each covers a factor
  /// span_points / 32 in frequency.
  std::size_t span_points = 256;
  /// A span whose top frequency is w_hi omits fluctuators with
  /// gamma > rate_cutoff * w_hi. Their share of S(w) is below
  /// 1 / (pi rate_cutoff).
  double rate_cutoff = 100.0;
  unsigned workers = 0;
};

/// Log-binned spectrum. `omega[k]` is the frequency at which the 1/f target
/// equals the bin mean of the target over the bin's ordinates.
struct PowerSpectrum {
  std::vector<double> omega;        // rad/s
  std::vector<double> s_estimated;  // (rad/s)^2 / (rad/s)
  std::vector<double> s_target;
  std::vector<std::size_t> ordinates;  // periodogram ordinates per bin
};

/// Averaged Hann-windowed periodogram of X(t) over `n_realizations`
/// independent records. Frequencies are covered by a cascade of spans: the
/// first span's record is t_max long and each next span is shorter by
/// span_points / 32. Each record holds bin averages of X, and the boxcar
/// response is divided out. Requires n_realizations >= 100, t_max long enough
/// to resolve omega_min, and at least one decade between omega_min and
/// omega_max.
PowerSpectrum psd_estimate(const FluctuatorEnsemble& ens, double t_max, std::size_t n_realizations,
                           std::uint64_t seed, const PsdOptions& options = {});

/// Shortest record that resolves `omega_min` with the default span layout.
double psd_min_record(double omega_min);

struct PowerLawFit {
  double slope = 0.0;            // least-squares d ln S / d ln omega
  double amplitude_ratio = 0.0;  // geometric mean of s_estimated / s_target
  double worst_bin_ratio = 0.0;  // s_estimated / s_target furthest from 1
  std::size_t bins = 0;
};

/// Fit over bins with omega in [omega_lo, omega_hi].
PowerLawFit fit_power_law(const PowerSpectrum& spectrum, double omega_lo, double omega_hi);

// ---------------------------------------------------------------------------
// Monte Carlo trajectories

struct SimConfig {
  std::size_t n_trajectories = 2000;
  double t_max = 5e-8;  // s
  std::size_t n_samples = 201;
  std::uint64_t seed = 1;
  /// Strength of -(g/2) sz_A sz_B in rad/s; 0 leaves the qubits uncoupled.
  double coupling_g = 0.0;
  AdiabaticParams qubit_a;
  AdiabaticParams qubit_b;
  /// Must be empty: trajectories carry classical 1/f noise only.
  std::optional<QuantumNoiseParams> quantum;
  std::size_t n_fluctuators = 250;
  /// Worker threads (0: automatic). Results do not depend on it.
  unsigned workers = 0;

  void validate() const;
  /// n_samples uniform times from 0 to t_max inclusive.
  std::vector<double> sample_times() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix4> unitaries;
  std::vector<Matrix4> states;  // U rho0 U^dagger
  double unitarity_defect = 0.0;
};

/// Exact propagation of rho0 under the Hamiltonian of both qubits with the
/// given classical noise histories. Between breakpoints the Hamiltonian is
/// constant and its propagator is evaluated in closed form (2x2 factors when
/// g == 0, a 4x4 eigendecomposition otherwise).
Trajectory evolve_trajectory(const DensityMatrix4& rho0, const NoiseTrace& noise_a,
                             const NoiseTrace& noise_b, const SimConfig& cfg);

struct MonteCarloResult {
  ConcurrenceCurve curve;                  // Wootters concurrence of the mean state
  std::vector<DensityMatrix4> mean_states;
  double max_unitarity_defect = 0.0;
};

/// Averages rho(t) over cfg.n_trajectories noise realisations and evaluates
/// the concurrence of the average. Standard errors come from a
/// delete-one-block jackknife over fixed trajectory blocks. Bit-identical for
/// a given (seed, cfg) regardless of the worker count.
MonteCarloResult monte_carlo_concurrence(const DensityMatrix4& rho0, const SimConfig& cfg);

/// The ensembles monte_carlo_concurrence uses for each qubit.
FluctuatorEnsemble simulation_ensemble(const SimConfig& cfg, int qubit);

}  // namespace esdlab
