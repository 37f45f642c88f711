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

#include "esdlab_cli/presets.hpp"

namespace esdlab::cli {

namespace {

ScenarioConfig adiabatic_only(double r, double t_max_omega, std::uint64_t samples) {
  ScenarioConfig c;
  c.state.r = r;
  c.quantum.enabled = false;
  c.sim.t_max_omega = t_max_omega;
  c.sim.samples = samples;
  return c;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig1a", "fig1b", "fig2", "fig3", "fig4a", "fig4b"};
  return names;
}

ScenarioConfig preset(const std::string& name) {
  if (name == "fig1a") return adiabatic_only(0.9, 6e4, 601);
  if (name == "fig1b") return adiabatic_only(0.9, 1e5, 1001);
  if (name == "fig2" || name == "fig3") {
    ScenarioConfig c;
    c.state.r = name == "fig2" ? 0.91 : 0.95;
    c.sim.t_max_omega = name == "fig2" ? 2e4 : 3e4;
    c.sim.samples = 3001;
    return c;
  }
  if (name == "fig4a" || name == "fig4b") {
    ScenarioConfig c = adiabatic_only(1.0, 5e3, 201);
    if (name == "fig4b") {
      c.qubit_b.omega_rad_s = 1.2e11;
      c.coupling.g_rad_s = 1e9;
    }
    return c;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace esdlab::cli
