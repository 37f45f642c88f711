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

#include "esdlab_cli/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>

#include "esdlab/constants.hpp"
#include "esdlab/parallel.hpp"
#include "esdlab/random.hpp"

namespace esdlab::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kStreamPsd = 0x707364;
constexpr double kEsdTol = 1e-10;

Scenario make_scenario(const ScenarioConfig& cfg, CoherenceModel model) {
  Scenario s;
  s.state = cfg.ewl();
  s.qubit_a = cfg.adiabatic_a();
  s.qubit_b = cfg.adiabatic_b();
  s.quantum = cfg.quantum_noise();
  s.model = model;
  s.curve_t_max = cfg.t_max_seconds();
  s.curve_samples = cfg.sim.samples;
  s.tol = kEsdTol;
  return s;
}

std::vector<double> time_grid(const ScenarioConfig& cfg) {
  std::vector<double> t(cfg.sim.samples);
  for (std::size_t k = 0; k < t.size(); ++k)
    t[k] = cfg.t_max_seconds() * static_cast<double>(k) / static_cast<double>(t.size() - 1);
  return t;
}

std::vector<double> linspace(double from, double to, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k)
    v[k] = n == 1 ? from : from + (to - from) * static_cast<double>(k) / static_cast<double>(n - 1);
  if (n > 1) v.back() = to;
  return v;
}

double esd_omega_t(const ESDResult& r, double omega) {
  if (r.time.is_infinite()) return std::numeric_limits<double>::infinity();
  return r.time.seconds() * omega;
}

json number_or_tag(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string label(const std::string& prefix, double value) { return prefix + format_double(value); }

double esd_of(const Scenario& s, Channel channel, double horizon) {
  const EsdSearch search{.omega_ref = s.qubit_a.omega};
  return esd_omega_t(find_esd_time(channel_witness(channel, s), horizon, s.tol, search), s.qubit_a.omega);
}

Scenario with_flavor(Scenario s, BellFlavor f) {
  s.state.flavor = f;
  return s;
}

Scenario quantum_only(Scenario s) {
  s.qubit_a.sigma = 0.0;
  s.qubit_b.sigma = 0.0;
  return s;
}

Scenario adiabatic_only(Scenario s) {
  s.quantum.reset();
  return s;
}

MonteCarloResult run_mc(const ScenarioConfig& cfg, unsigned workers) {
  if (cfg.quantum.enabled)
    throw ConfigError("the montecarlo channel simulates classical 1/f noise only; set quantum.enabled = false");
  return monte_carlo_concurrence(ewl_state(cfg.ewl()), cfg.sim_config(workers));
}

std::vector<double> analytic_curve(const Scenario& s, Channel channel, const std::vector<double>& times) {
  const WitnessFn f = channel_witness(channel, s);
  std::vector<double> c(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) c[k] = std::clamp(f(times[k]), 0.0, 1.0);
  return c;
}

void add_column(Table& t, const std::string& name, const std::vector<double>& values) {
  t.header.push_back(name);
  if (t.rows.empty()) t.rows.resize(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) t.rows[k].push_back(values[k]);
}

std::vector<double> scaled(std::vector<double> v, double factor) {
  for (double& x : v) x *= factor;
  return v;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

FigureOutput figure_one(const std::string& name, const ScenarioConfig& cfg, unsigned workers) {
  const bool over_a2 = name == "fig1a";
  const std::vector<double> grid = over_a2 ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}
                                           : std::vector<double>{0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 1.0};
  Scenario s = make_scenario(cfg, CoherenceModel::kFactorized);
  s.esd_horizon = 1e8 / cfg.omega_ref();
  const auto rows = sweep(over_a2 ? SweepAxis::kA2 : SweepAxis::kR, s, grid, Channel::kAdiabatic, workers);

  FigureOutput out;
  Table t;
  add_column(t, "omega_t", scaled(rows.front().curve.times, cfg.omega_ref()));
  json esd = json::array();
  for (const auto& row : rows) {
    add_column(t, label(over_a2 ? "c_a2_" : "c_r_", row.value), row.curve.values);
    Scenario rs = s;
    if (over_a2) rs.state.a = Complex(std::sqrt(row.value), 0.0);
    else rs.state.r = row.value;
    json entry = {{over_a2 ? "a2" : "r", row.value}, {"omega_t_esd", number_or_tag(esd_omega_t(row.esd, cfg.omega_ref()))}};
    if (std::abs(rs.qubit_a.theta - std::numbers::pi / 2) < 1e-12 && rs.qubit_a.sigma == rs.qubit_b.sigma && rs.qubit_a.omega == rs.qubit_b.omega) {
      const EsdTime cf = esd_time_optimal(rs.state, rs.qubit_a.sigma, rs.qubit_a.omega);
      entry["omega_t_esd_closed_form"] = number_or_tag(cf.seconds() * cfg.omega_ref());
    }
    esd.push_back(entry);
  }
  out.files.emplace_back(name + ".csv", std::move(t));
  out.summary["esd"] = esd;
  return out;
}

FigureOutput figure_two(const ScenarioConfig& cfg, unsigned workers) {
  const std::vector<double> grid = linspace(0.34, 1.0, 67);
  const Scenario base = make_scenario(cfg, CoherenceModel::kFactorized);
  const double horizon = 1e8 / cfg.omega_ref();
  FigureOutput out;
  for (BellFlavor f : {BellFlavor::kPhi, BellFlavor::kPsi}) {
    std::vector<double> ad(grid.size()), qu(grid.size()), comb(grid.size());
    parallel_for(grid.size(), worker_count(workers), [&](std::size_t i) {
      Scenario s = with_flavor(base, f);
      s.state.r = grid[i];
      ad[i] = esd_of(adiabatic_only(s), Channel::kAdiabatic, horizon);
      qu[i] = esd_of(quantum_only(s), Channel::kInterplay, horizon);
      comb[i] = esd_of(s, Channel::kInterplay, horizon);
    });
    Table t;
    add_column(t, "r", grid);
    add_column(t, "omega_t_esd_adiabatic", ad);
    add_column(t, "omega_t_esd_quantum", qu);
    add_column(t, "omega_t_esd_combined", comb);
    out.files.emplace_back("fig2_" + flavor_name(f) + ".csv", std::move(t));

    Scenario p = with_flavor(base, f);
    p.state.r = 0.91;
    out.summary["p_exp"][flavor_name(f)] = {{"r", 0.91},
                                           {"omega_t_esd_combined", number_or_tag(esd_of(p, Channel::kInterplay, horizon))}};
  }
  return out;
}

FigureOutput figure_three(const ScenarioConfig& cfg) {
  const std::vector<double> times = time_grid(cfg);
  const Scenario base = make_scenario(cfg, CoherenceModel::kFactorized);
  const double horizon = 1e8 / cfg.omega_ref();
  const EsdSearch search{.omega_ref = cfg.omega_ref()};
  FigureOutput out;
  for (BellFlavor f : {BellFlavor::kPhi, BellFlavor::kPsi}) {
    const Scenario s = with_flavor(base, f);
    Table t;
    add_column(t, "omega_t", scaled(times, cfg.omega_ref()));
    add_column(t, "c_adiabatic", analytic_curve(adiabatic_only(s), Channel::kAdiabatic, times));
    add_column(t, "c_quantum", analytic_curve(quantum_only(s), Channel::kInterplay, times));
    add_column(t, "c_combined", analytic_curve(s, Channel::kInterplay, times));
    out.files.emplace_back("fig3_" + flavor_name(f) + ".csv", std::move(t));

    const WitnessFn w = channel_witness(Channel::kInterplay, s);
    const ESDResult bell = first_crossing(w, kBellViolationThreshold, horizon, kEsdTol, search);
    out.summary["bell_threshold"][flavor_name(f)] = number_or_tag(esd_omega_t(bell, cfg.omega_ref()));
    out.summary["esd_combined"][flavor_name(f)] = number_or_tag(esd_of(s, Channel::kInterplay, horizon));
  }
  return out;
}

FigureOutput figure_four_a(const ScenarioConfig& cfg, unsigned workers) {
  const std::vector<double> times = time_grid(cfg);
  FigureOutput out;
  Table t;
  add_column(t, "omega_t", scaled(times, cfg.omega_ref()));
  for (double r : {1.0, 0.9, 0.8}) {
    ScenarioConfig resonant = cfg;
    resonant.state.r = r;
    resonant.qubit_b = resonant.qubit_a;
    ScenarioConfig detuned = resonant;
    detuned.qubit_b.omega_rad_s = 1.2 * cfg.qubit_a.omega_rad_s;
    const MonteCarloResult mr = run_mc(resonant, workers);
    const MonteCarloResult md = run_mc(detuned, workers);
    const std::string tag = "_r" + format_double(r);
    add_column(t, "mc_resonant" + tag, mr.curve.values);
    add_column(t, "stderr_resonant" + tag, mr.curve.stderr_values);
    add_column(t, "mc_detuned" + tag, md.curve.values);
    add_column(t, "stderr_detuned" + tag, md.curve.stderr_values);
    const auto spa_r = analytic_curve(make_scenario(resonant, CoherenceModel::kFactorized), Channel::kAdiabatic, times);
    const auto spa_d = analytic_curve(make_scenario(detuned, CoherenceModel::kFactorized), Channel::kAdiabatic, times);
    add_column(t, "spa_resonant" + tag, spa_r);
    add_column(t, "spa_detuned" + tag, spa_d);
    out.summary["max_detuning_deviation"][format_double(r)] = max_abs_diff(mr.curve.values, md.curve.values);
    out.summary["max_mc_spa_deviation"][format_double(r)] = max_abs_diff(mr.curve.values, spa_r);
  }
  out.files.emplace_back("fig4a.csv", std::move(t));
  return out;
}

FigureOutput figure_four_b(const ScenarioConfig& cfg, unsigned workers) {
  const std::vector<double> times = time_grid(cfg);
  ScenarioConfig uncoupled = cfg;
  uncoupled.coupling.g_rad_s = 0.0;
  ScenarioConfig resonant = uncoupled;
  resonant.qubit_b = resonant.qubit_a;
  const MonteCarloResult coupled_mc = run_mc(cfg, workers);
  const MonteCarloResult uncoupled_mc = run_mc(uncoupled, workers);
  const MonteCarloResult resonant_mc = run_mc(resonant, workers);

  FigureOutput out;
  Table t;
  add_column(t, "omega_t", scaled(times, cfg.omega_ref()));
  add_column(t, "coupled_detuned", coupled_mc.curve.values);
  add_column(t, "stderr_coupled_detuned", coupled_mc.curve.stderr_values);
  add_column(t, "uncoupled_detuned", uncoupled_mc.curve.values);
  add_column(t, "stderr_uncoupled_detuned", uncoupled_mc.curve.stderr_values);
  add_column(t, "uncoupled_resonant", resonant_mc.curve.values);
  add_column(t, "stderr_uncoupled_resonant", resonant_mc.curve.stderr_values);
  out.files.emplace_back("fig4b.csv", std::move(t));
  out.summary["max_coupling_deviation"] = max_abs_diff(coupled_mc.curve.values, uncoupled_mc.curve.values);
  return out;
}

}  // namespace

Channel parse_channel(const std::string& s) {
  if (s == "adiabatic") return Channel::kAdiabatic;
  if (s == "interplay") return Channel::kInterplay;
  if (s == "montecarlo") return Channel::kMonteCarlo;
  throw ConfigError("channel must be adiabatic, interplay or montecarlo, got '" + s + "'");
}

CoherenceModel parse_coherence_model(const std::string& s) {
  if (s == "factorized") return CoherenceModel::kFactorized;
  if (s == "log-cross-term") return CoherenceModel::kLogCrossTerm;
  throw ConfigError("coherence model must be factorized or log-cross-term, got '" + s + "'");
}

Table concurrence_table(const ScenarioConfig& cfg, Channel channel, CoherenceModel model, unsigned workers) {
  cfg.validate();
  Table t;
  if (channel == Channel::kMonteCarlo) {
    const MonteCarloResult mc = run_mc(cfg, workers);
    add_column(t, "omega_t", scaled(mc.curve.times, cfg.omega_ref()));
    add_column(t, "concurrence", mc.curve.values);
    add_column(t, "stderr", mc.curve.stderr_values);
    return t;
  }
  if (cfg.coupling.g_rad_s != 0.0)
    throw ConfigError("a nonzero coupling needs the montecarlo channel");
  const std::vector<double> times = time_grid(cfg);
  add_column(t, "omega_t", scaled(times, cfg.omega_ref()));
  add_column(t, "concurrence", analytic_curve(make_scenario(cfg, model), channel, times));
  return t;
}

Table esd_table(const ScenarioConfig& cfg, const EsdSweepSpec& spec, CoherenceModel model, unsigned workers) {
  cfg.validate();
  if (spec.axis != "r" && spec.axis != "a2") throw ConfigError("--sweep must be r or a2");
  if (spec.points < 1) throw ConfigError("--points must be >= 1");
  if (!(spec.horizon_omega > 0.0) || !std::isfinite(spec.horizon_omega)) throw ConfigError("--horizon must be positive");
  const std::vector<double> grid = linspace(spec.from, spec.to, spec.points);
  for (double v : grid)
    if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("sweep values must lie in [0, 1]");

  const Scenario base = make_scenario(cfg, model);
  const double horizon = spec.horizon_omega / cfg.omega_ref();
  std::vector<std::array<double, 4>> cols(grid.size());
  parallel_for(grid.size(), worker_count(workers), [&](std::size_t i) {
    Scenario s = base;
    if (spec.axis == "r") s.state.r = grid[i];
    else s.state.a = Complex(std::sqrt(grid[i]), 0.0);
    cols[i] = {esd_of(with_flavor(s, BellFlavor::kPhi), Channel::kInterplay, horizon),
               esd_of(with_flavor(s, BellFlavor::kPsi), Channel::kInterplay, horizon),
               esd_of(s, Channel::kAdiabatic, horizon),
               s.quantum ? esd_of(quantum_only(s), Channel::kInterplay, horizon)
                         : esd_of(quantum_only(s), Channel::kAdiabatic, horizon)};
  });

  Table t;
  t.header = {"sweep_value", "omega_t_esd_phi", "omega_t_esd_psi", "omega_t_esd_adiabatic", "omega_t_esd_quantum"};
  for (std::size_t i = 0; i < grid.size(); ++i)
    t.rows.push_back({grid[i], cols[i][0], cols[i][1], cols[i][2], cols[i][3]});
  return t;
}

Table psd_table(const ScenarioConfig& cfg, const PsdSpec& spec, unsigned workers) {
  cfg.validate();
  const AdiabaticParams q = cfg.adiabatic_a();
  const FluctuatorEnsemble ens =
      sample_ensemble(cfg.sim.fluctuators, q.gamma_min, q.gamma_max, q.sigma, derive_seed(cfg.sim.seed, kStreamPsd, 0));
  PsdOptions opt;
  opt.omega_min = spec.omega_min;
  opt.omega_max = spec.omega_max;
  opt.workers = workers;
  const double w_lo = spec.omega_min > 0.0 ? spec.omega_min : 10.0 * q.gamma_min;
  const PowerSpectrum ps =
      psd_estimate(ens, psd_min_record(w_lo), spec.realizations, derive_seed(cfg.sim.seed, kStreamPsd, 1), opt);
  Table t;
  add_column(t, "omega_rad_s", ps.omega);
  add_column(t, "s_estimated", ps.s_estimated);
  add_column(t, "s_target", ps.s_target);
  return t;
}

FigureOutput figure(const std::string& name, const ScenarioConfig& cfg, unsigned workers) {
  cfg.validate();
  if (name == "fig1a" || name == "fig1b") return figure_one(name, cfg, workers);
  if (name == "fig2") return figure_two(cfg, workers);
  if (name == "fig3") return figure_three(cfg);
  if (name == "fig4a") return figure_four_a(cfg, workers);
  if (name == "fig4b") return figure_four_b(cfg, workers);
  throw ConfigError("unknown figure '" + name + "'");
}

void write_figure(const std::string& name, const FigureOutput& out, const ScenarioConfig& cfg,
                  const std::string& dir, bool gnuplot, const std::string& version) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir + "': " + ec.message());

  json files = json::array();
  for (const auto& [file, table] : out.files) {
    write_csv((fs::path(dir) / file).string(), table);
    files.push_back(file);
    if (!gnuplot) continue;
    const std::string script = fs::path(file).replace_extension(".gp").string();
    std::ofstream gp(fs::path(dir) / script);
    if (!gp) throw std::runtime_error("cannot write '" + script + "'");
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel '" << table.header.front() << "'\n"
       << "plot for [i=2:" << table.header.size() << "] '" << file << "' using 1:i with lines\n";
    files.push_back(script);
  }

  const json manifest = {{"figure", name},
                         {"version", version},
                         {"parameters", to_json(cfg)},
                         {"files", files},
                         {"summary", out.summary}};
  std::ofstream m(fs::path(dir) / "manifest.json");
  if (!m) throw std::runtime_error("cannot write manifest in '" + dir + "'");
  m << manifest.dump(2) << '\n';
}

}  // namespace esdlab::cli
