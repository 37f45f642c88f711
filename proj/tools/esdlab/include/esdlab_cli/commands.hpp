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
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "esdlab_cli/csv.hpp"
#include "esdlab_cli/scenario.hpp"

namespace esdlab::cli {

Channel parse_channel(const std::string& s);
CoherenceModel parse_coherence_model(const std::string& s);

/// Columns omega_t, concurrence, and stderr for the Monte Carlo channel.
/// One row per sim.samples on [0, sim.t_max_omega].
Table concurrence_table(const ScenarioConfig& cfg, Channel channel, CoherenceModel model, unsigned workers);

struct EsdSweepSpec {
  std::string axis = "r";  // "r" or "a2"
  double from = 0.4;
  double to = 0.99;
  std::size_t points = 60;
  double horizon_omega = 1e8;
};

/// Columns sweep_value, omega_t_esd_phi, omega_t_esd_psi,
/// omega_t_esd_adiabatic, omega_t_esd_quantum. phi and psi combine both noise
/// channels; the quantum column sets sigma = 0 and uses the configured
/// flavour. Infinite ESD times are +inf, separable initial states 0.
Table esd_table(const ScenarioConfig& cfg, const EsdSweepSpec& spec, CoherenceModel model, unsigned workers);

struct PsdSpec {
  std::size_t realizations = 500;
  double omega_min = 0.0;  // 0: 10 gamma_min
  double omega_max = 0.0;  // 0: gamma_max / 10
};

/// Columns omega_rad_s, s_estimated, s_target for qubit A's fluctuators.
Table psd_table(const ScenarioConfig& cfg, const PsdSpec& spec, unsigned workers);

struct FigureOutput {
  std::vector<std::pair<std::string, Table>> files;
  nlohmann::json summary = nlohmann::json::object();
};

/// Data for one figure. `cfg` normally comes from preset(name).
FigureOutput figure(const std::string& name, const ScenarioConfig& cfg, unsigned workers);

/// CSVs, manifest.json and optional gnuplot scripts into `dir`.
void write_figure(const std::string& name, const FigureOutput& out, const ScenarioConfig& cfg,
                  const std::string& dir, bool gnuplot, const std::string& version);

}  // namespace esdlab::cli
