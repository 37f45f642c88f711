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
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "esdlab/adiabatic.hpp"
#include "esdlab/curve.hpp"
#include "esdlab/esd_time.hpp"
#include "esdlab/markov.hpp"
#include "esdlab/states.hpp"
#include "esdlab/stochastic.hpp"

namespace esdlab {

/// Time (s) -> unclamped concurrence 2K(t); negative values mean separable.
using WitnessFn = std::function<double(double)>;

enum class EsdMethod { kClosedForm, kBisection, kGrid };

std::string_view to_string(EsdMethod m);

struct ESDResult {
  EsdTime time = EsdTime::infinite();
  double t_lo = 0.0;  // f(t_lo) > level
  double t_hi = 0.0;  // f(t_hi) <= level
  EsdMethod method = EsdMethod::kGrid;
  /// The function stayed at or below the level on the probe points after t_hi.
  bool monotone_after = true;
  /// Noisy curves: first crossings of mean - 2 stderr and mean + 2 stderr.
  std::optional<double> stat_lo;
  std::optional<double> stat_hi;
};

struct EsdSearch {
  /// With omega_ref > 0 the scan grid is linear up to t = 1/omega_ref and
  /// logarithmic beyond it; otherwise it is linear on [0, t_max].
  double omega_ref = 0.0;
  std::size_t grid_points = 10000;
  /// Probe points checked after the crossing.
  std::size_t tail_probes = 64;
};

/// First time f reaches `level` from above: grid scan, then bisection until
/// the bracket is narrower than tol * t. f(0) <= level returns time 0 with the
/// never-entangled tag; no crossing up to t_max returns Infinite.
ESDResult first_crossing(const WitnessFn& f, double level, double t_max, double tol,
                         const EsdSearch& search = {});

/// first_crossing at level 0.
ESDResult find_esd_time(const WitnessFn& f, double t_max, double tol, const EsdSearch& search = {});

/// Sampled curves: the first sample at or below `level` (method kGrid),
/// interpolated linearly inside its bracket. With standard errors, stat_lo
/// and stat_hi bracket the crossing at +-2 stderr.
ESDResult first_crossing(const ConcurrenceCurve& curve, double level);
ESDResult find_esd_time(const ConcurrenceCurve& curve);

/// Everything a channel needs besides the sweep variable.
struct Scenario {
  EWLParams state;
  AdiabaticParams qubit_a;
  AdiabaticParams qubit_b;
  std::optional<QuantumNoiseParams> quantum;
  CoherenceModel model = CoherenceModel::kFactorized;
  /// Required for Channel::kMonteCarlo; its qubits and t_max/n_samples are
  /// overridden by the fields here.
  std::optional<SimConfig> sim;
  double curve_t_max = 5e-8;  // s
  std::size_t curve_samples = 201;
  double esd_horizon = 1e-3;  // s
  double tol = 1e-10;
};

enum class Channel { kAdiabatic, kInterplay, kMonteCarlo };
enum class SweepAxis { kR, kA2, kTime };

std::string_view to_string(Channel c);

/// Unclamped concurrence of an analytic channel. kAdiabatic ignores
/// `quantum`; kInterplay composes both channels (adiabatic alone when
/// `quantum` is empty) and returns 2 max(K1, K2).
WitnessFn channel_witness(Channel channel, const Scenario& scenario);

struct SweepRow {
  double value = 0.0;
  ConcurrenceCurve curve;
  ESDResult esd;
  /// First crossing of the Bell-violation threshold 1/sqrt(2).
  ESDResult bell_threshold;
};

/// One row per grid value, in grid order. For kR and kA2 each row holds the
/// curve on [0, curve_t_max] and the ESD time within esd_horizon. For kTime
/// each row is the concurrence at that time; esd and bell_threshold refer to
/// the whole scenario. Analytic rows run in parallel.
std::vector<SweepRow> sweep(SweepAxis axis, const Scenario& scenario, const std::vector<double>& grid,
                            Channel channel, unsigned workers = 0);

}  // namespace esdlab
