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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "esdlab/analysis.hpp"

namespace esdlab::cli {

/// Bad user input: malformed JSON, unknown keys, out-of-range values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateSection {
  std::string flavor = "psi";  // "phi" or "psi"
  double r = 1.0;
  double a2 = 0.5;
  double phase = 0.0;  // phase of b, rad
};

struct QubitSection {
  double omega_rad_s = 1e11;
  double theta_rad = 1.5707963267948966;
  double sigma_rad_s = 2e9;
  double gamma_min_hz = 1.0;
  double gamma_max_hz = 1e6;
};

struct QuantumSection {
  double s_white_per_s = 2e6;
  double temperature_k = 0.04;
  bool enabled = true;
};

struct CouplingSection {
  double g_rad_s = 0.0;
};

struct SimSection {
  std::uint64_t trajectories = 2000;
  double t_max_omega = 2e4;  // in units of 1 / omega of qubit A
  std::uint64_t samples = 201;
  std::uint64_t seed = 1;
  std::uint64_t fluctuators = 250;
};

struct ScenarioConfig {
  StateSection state;
  QubitSection qubit_a;
  QubitSection qubit_b;
  QuantumSection quantum;
  CouplingSection coupling;
  SimSection sim;

  /// Throws ConfigError on any invalid field.
  void validate() const;

  EWLParams ewl() const;
  AdiabaticParams adiabatic_a() const;
  AdiabaticParams adiabatic_b() const;
  std::optional<QuantumNoiseParams> quantum_noise() const;
  SimConfig sim_config(unsigned workers) const;
  double omega_ref() const { return qubit_a.omega_rad_s; }
  double t_max_seconds() const { return sim.t_max_omega / qubit_a.omega_rad_s; }
};

/// Overlays `j` on `base`. Unknown sections or keys and wrongly typed values
/// throw ConfigError.
ScenarioConfig apply_json(ScenarioConfig base, const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path, ScenarioConfig base);
nlohmann::json to_json(const ScenarioConfig& c);

BellFlavor parse_flavor(const std::string& s);
std::string flavor_name(BellFlavor f);

}  // namespace esdlab::cli
