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

#include "esdlab_cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "esdlab/error.hpp"
#include "esdlab_cli/commands.hpp"
#include "esdlab_cli/presets.hpp"

#ifndef ESDLAB_VERSION_STRING
#define ESDLAB_VERSION_STRING "unknown"
#endif

namespace esdlab::cli {

namespace {

constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

struct Overrides {
  std::string config;
  std::string preset;
  std::optional<std::string> flavor;
  std::optional<double> r, a2, phase, t_max_omega;
  std::optional<std::uint64_t> seed, trajectories, samples, fluctuators;
  bool no_quantum = false;
  unsigned threads = 0;
  std::string coherence_model = "factorized";

  void attach(CLI::App* app, bool with_preset, bool with_model) {
    app->add_option("--config", config, "JSON scenario file")->check(CLI::ExistingFile);
    if (with_preset) app->add_option("--preset", preset, "figure preset (fig1a ... fig4b)");
    app->add_option("--flavor", flavor, "phi or psi");
    app->add_option("--r", r, "purity of the initial state");
    app->add_option("--a2", a2, "|a|^2 of the Bell-like part");
    app->add_option("--phase", phase, "phase of b (rad)");
    app->add_option("--t-max", t_max_omega, "time span as omega * t");
    app->add_option("--samples", samples, "points on the time grid");
    app->add_option("--seed", seed, "Monte Carlo seed");
    app->add_option("--trajectories", trajectories, "Monte Carlo trajectories");
    app->add_option("--fluctuators", fluctuators, "fluctuators per qubit");
    app->add_flag("--no-quantum", no_quantum, "disable quantum noise");
    app->add_option("--threads", threads, "worker threads (0: automatic)");
    if (with_model) app->add_option("--coherence-model", coherence_model, "factorized or log-cross-term");
  }

  ScenarioConfig resolve(const std::string& forced_preset = "") const {
    const std::string name = forced_preset.empty() ? preset : forced_preset;
    ScenarioConfig c = name.empty() ? ScenarioConfig{} : cli::preset(name);
    if (!config.empty()) c = load_config(config, c);
    if (flavor) c.state.flavor = *flavor;
    if (r) c.state.r = *r;
    if (a2) c.state.a2 = *a2;
    if (phase) c.state.phase = *phase;
    if (t_max_omega) c.sim.t_max_omega = *t_max_omega;
    if (samples) c.sim.samples = *samples;
    if (seed) c.sim.seed = *seed;
    if (trajectories) c.sim.trajectories = *trajectories;
    if (fluctuators) c.sim.fluctuators = *fluctuators;
    if (no_quantum) c.quantum.enabled = false;
    c.validate();
    return c;
  }
};

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Entanglement sudden death of two qubits under 1/f and quantum noise"};
  app.set_version_flag("--version", std::string(ESDLAB_VERSION_STRING));
  app.require_subcommand(1);

  Overrides conc_opts, esd_opts, psd_opts, fig_opts;
  std::string channel = "adiabatic", conc_out = "-", esd_out = "-", psd_out = "-";

  auto* conc = app.add_subcommand("concurrence", "concurrence curve as CSV");
  conc_opts.attach(conc, true, true);
  conc->add_option("--channel", channel, "adiabatic, interplay or montecarlo");
  conc->add_option("--out", conc_out, "output CSV ('-' for stdout)");

  EsdSweepSpec sweep_spec;
  auto* esd = app.add_subcommand("esd", "ESD times over a parameter sweep as CSV");
  esd_opts.attach(esd, true, true);
  esd->add_option("--sweep", sweep_spec.axis, "r or a2");
  esd->add_option("--from", sweep_spec.from, "first sweep value");
  esd->add_option("--to", sweep_spec.to, "last sweep value");
  esd->add_option("--points", sweep_spec.points, "number of sweep values");
  esd->add_option("--horizon", sweep_spec.horizon_omega, "search horizon as omega * t");
  esd->add_option("--out", esd_out, "output CSV ('-' for stdout)");

  PsdSpec psd_spec;
  auto* psd = app.add_subcommand("psd", "1/f spectrum of qubit A's fluctuators as CSV");
  psd_opts.attach(psd, true, false);
  psd->add_option("--realizations", psd_spec.realizations, "independent noise records");
  psd->add_option("--omega-min", psd_spec.omega_min, "lowest frequency (rad/s)");
  psd->add_option("--omega-max", psd_spec.omega_max, "highest frequency (rad/s)");
  psd->add_option("--out", psd_out, "output CSV ('-' for stdout)");

  std::string fig_name, fig_dir;
  bool gnuplot = false;
  auto* fig = app.add_subcommand("figure", "reproduce a figure: CSVs and manifest.json");
  fig_opts.attach(fig, false, false);
  fig->add_option("name", fig_name, "fig1a, fig1b, fig2, fig3, fig4a or fig4b")->required();
  fig->add_option("--out-dir", fig_dir, "output directory (default: ./<name>)");
  fig->add_flag("--gnuplot", gnuplot, "also write gnuplot scripts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*conc) {
      const ScenarioConfig cfg = conc_opts.resolve();
      write_csv(conc_out, concurrence_table(cfg, parse_channel(channel),
                                            parse_coherence_model(conc_opts.coherence_model), conc_opts.threads));
    } else if (*esd) {
      const ScenarioConfig cfg = esd_opts.resolve();
      write_csv(esd_out, esd_table(cfg, sweep_spec, parse_coherence_model(esd_opts.coherence_model), esd_opts.threads));
    } else if (*psd) {
      const ScenarioConfig cfg = psd_opts.resolve();
      write_csv(psd_out, psd_table(cfg, psd_spec, psd_opts.threads));
    } else if (*fig) {
      const auto& names = preset_names();
      if (std::find(names.begin(), names.end(), fig_name) == names.end())
        throw ConfigError("unknown figure '" + fig_name + "'");
      const ScenarioConfig cfg = fig_opts.resolve(fig_name);
      const FigureOutput out = figure(fig_name, cfg, fig_opts.threads);
      write_figure(fig_name, out, cfg, fig_dir.empty() ? fig_name : fig_dir, gnuplot, ESDLAB_VERSION_STRING);
    }
  } catch (const ConfigError& e) {
    std::cerr << "esdlab: " << e.what() << '\n';
    return kConfigError;
  } catch (const ParameterError& e) {
    std::cerr << "esdlab: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "esdlab: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}

}  // namespace esdlab::cli
