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

#include "esdlab_cli/scenario.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "esdlab/error.hpp"

namespace esdlab::cli {

namespace {

using nlohmann::json;
using Setter = std::function<void(const json&)>;

void read_number(const json& v, const std::string& key, double& out) {
  if (!v.is_number()) throw ConfigError(key + ": expected a number");
  out = v.get<double>();
}

void read_count(const json& v, const std::string& key, std::uint64_t& out) {
  if (!v.is_number_unsigned()) throw ConfigError(key + ": expected a non-negative integer");
  out = v.get<std::uint64_t>();
}

void apply_section(const json& section, const std::string& name, const std::map<std::string, Setter>& fields) {
  if (!section.is_object()) throw ConfigError(name + ": expected an object");
  for (const auto& [key, value] : section.items()) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ConfigError("unknown key '" + name + "." + key + "'");
    it->second(value);
  }
}

std::map<std::string, Setter> qubit_fields(QubitSection& q, const std::string& name) {
  return {
      {"omega_rad_s", [&q, name](const json& v) { read_number(v, name + ".omega_rad_s", q.omega_rad_s); }},
      {"theta_rad", [&q, name](const json& v) { read_number(v, name + ".theta_rad", q.theta_rad); }},
      {"sigma_rad_s", [&q, name](const json& v) { read_number(v, name + ".sigma_rad_s", q.sigma_rad_s); }},
      {"gamma_min_hz", [&q, name](const json& v) { read_number(v, name + ".gamma_min_hz", q.gamma_min_hz); }},
      {"gamma_max_hz", [&q, name](const json& v) { read_number(v, name + ".gamma_max_hz", q.gamma_max_hz); }},
  };
}

json qubit_json(const QubitSection& q) {
  return {{"omega_rad_s", q.omega_rad_s},
          {"theta_rad", q.theta_rad},
          {"sigma_rad_s", q.sigma_rad_s},
          {"gamma_min_hz", q.gamma_min_hz},
          {"gamma_max_hz", q.gamma_max_hz}};
}

AdiabaticParams to_adiabatic(const QubitSection& q) {
  AdiabaticParams p;
  p.omega = q.omega_rad_s;
  p.theta = q.theta_rad;
  p.sigma = q.sigma_rad_s;
  p.gamma_min = q.gamma_min_hz;
  p.gamma_max = q.gamma_max_hz;
  return p;
}

template <class F>
void rethrow_as_config(const std::string& what, F&& f) {
  try {
    f();
  } catch (const ParameterError& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

}  // namespace

BellFlavor parse_flavor(const std::string& s) {
  if (s == "phi") return BellFlavor::kPhi;
  if (s == "psi") return BellFlavor::kPsi;
  throw ConfigError("flavor must be 'phi' or 'psi', got '" + s + "'");
}

std::string flavor_name(BellFlavor f) { return f == BellFlavor::kPhi ? "phi" : "psi"; }

void ScenarioConfig::validate() const {
  parse_flavor(state.flavor);
  if (!(state.a2 >= 0.0 && state.a2 <= 1.0)) throw ConfigError("state.a2 must lie in [0, 1]");
  if (!std::isfinite(state.phase)) throw ConfigError("state.phase must be finite");
  rethrow_as_config("state", [&] { ewl().validate(); });
  rethrow_as_config("qubit_a", [&] { adiabatic_a().validate(); });
  rethrow_as_config("qubit_b", [&] { adiabatic_b().validate(); });
  if (quantum.enabled) rethrow_as_config("quantum", [&] { quantum_noise()->validate(); });
  if (!std::isfinite(coupling.g_rad_s)) throw ConfigError("coupling.g_rad_s must be finite");
  if (sim.trajectories < 1) throw ConfigError("sim.trajectories must be >= 1");
  if (!(sim.t_max_omega > 0.0) || !std::isfinite(sim.t_max_omega)) throw ConfigError("sim.t_max_omega must be positive");
  if (sim.samples < 2) throw ConfigError("sim.samples must be >= 2");
  if (sim.fluctuators < 1) throw ConfigError("sim.fluctuators must be >= 1");
}

EWLParams ScenarioConfig::ewl() const {
  return ewl_params(state.r, state.a2, parse_flavor(state.flavor), state.phase);
}

AdiabaticParams ScenarioConfig::adiabatic_a() const { return to_adiabatic(qubit_a); }
AdiabaticParams ScenarioConfig::adiabatic_b() const { return to_adiabatic(qubit_b); }

std::optional<QuantumNoiseParams> ScenarioConfig::quantum_noise() const {
  if (!quantum.enabled) return std::nullopt;
  return QuantumNoiseParams{quantum.s_white_per_s, quantum.temperature_k};
}

SimConfig ScenarioConfig::sim_config(unsigned workers) const {
  SimConfig cfg;
  cfg.n_trajectories = sim.trajectories;
  cfg.t_max = t_max_seconds();
  cfg.n_samples = sim.samples;
  cfg.seed = sim.seed;
  cfg.coupling_g = coupling.g_rad_s;
  cfg.qubit_a = adiabatic_a();
  cfg.qubit_b = adiabatic_b();
  cfg.n_fluctuators = sim.fluctuators;
  cfg.workers = workers;
  return cfg;
}

ScenarioConfig apply_json(ScenarioConfig c, const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  const std::map<std::string, Setter> sections = {
      {"state",
       [&c](const json& s) {
         apply_section(s, "state",
                       {{"flavor",
                         [&c](const json& v) {
                           if (!v.is_string()) throw ConfigError("state.flavor: expected a string");
                           c.state.flavor = v.get<std::string>();
                         }},
                        {"r", [&c](const json& v) { read_number(v, "state.r", c.state.r); }},
                        {"a2", [&c](const json& v) { read_number(v, "state.a2", c.state.a2); }},
                        {"phase", [&c](const json& v) { read_number(v, "state.phase", c.state.phase); }}});
       }},
      {"qubit_a", [&c](const json& s) { apply_section(s, "qubit_a", qubit_fields(c.qubit_a, "qubit_a")); }},
      {"qubit_b", [&c](const json& s) { apply_section(s, "qubit_b", qubit_fields(c.qubit_b, "qubit_b")); }},
      {"quantum",
       [&c](const json& s) {
         apply_section(s, "quantum",
                       {{"s_white_per_s", [&c](const json& v) { read_number(v, "quantum.s_white_per_s", c.quantum.s_white_per_s); }},
                        {"temperature_k", [&c](const json& v) { read_number(v, "quantum.temperature_k", c.quantum.temperature_k); }},
                        {"enabled", [&c](const json& v) {
                           if (!v.is_boolean()) throw ConfigError("quantum.enabled: expected a boolean");
                           c.quantum.enabled = v.get<bool>();
                         }}});
       }},
      {"coupling",
       [&c](const json& s) {
         apply_section(s, "coupling", {{"g_rad_s", [&c](const json& v) { read_number(v, "coupling.g_rad_s", c.coupling.g_rad_s); }}});
       }},
      {"sim",
       [&c](const json& s) {
         apply_section(s, "sim",
                       {{"trajectories", [&c](const json& v) { read_count(v, "sim.trajectories", c.sim.trajectories); }},
                        {"t_max_omega", [&c](const json& v) { read_number(v, "sim.t_max_omega", c.sim.t_max_omega); }},
                        {"samples", [&c](const json& v) { read_count(v, "sim.samples", c.sim.samples); }},
                        {"seed", [&c](const json& v) { read_count(v, "sim.seed", c.sim.seed); }},
                        {"fluctuators", [&c](const json& v) { read_count(v, "sim.fluctuators", c.sim.fluctuators); }}});
       }},
  };
  apply_section(j, "config", sections);
  return c;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return apply_json(std::move(base), j);
}

json to_json(const ScenarioConfig& c) {
  return {{"state", {{"flavor", c.state.flavor}, {"r", c.state.r}, {"a2", c.state.a2}, {"phase", c.state.phase}}},
          {"qubit_a", qubit_json(c.qubit_a)},
          {"qubit_b", qubit_json(c.qubit_b)},
          {"quantum",
           {{"s_white_per_s", c.quantum.s_white_per_s},
            {"temperature_k", c.quantum.temperature_k},
            {"enabled", c.quantum.enabled}}},
          {"coupling", {{"g_rad_s", c.coupling.g_rad_s}}},
          {"sim",
           {{"trajectories", c.sim.trajectories},
            {"t_max_omega", c.sim.t_max_omega},
            {"samples", c.sim.samples},
            {"seed", c.sim.seed},
            {"fluctuators", c.sim.fluctuators}}}};
}

}  // namespace esdlab::cli
