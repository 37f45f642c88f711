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

#include "esdlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "esdlab/constants.hpp"
#include "esdlab/error.hpp"
#include "esdlab/parallel.hpp"

namespace esdlab {

namespace {

constexpr std::size_t kLinearHead = 16;
constexpr int kMaxBisections = 200;

std::vector<double> scan_grid(double t_max, const EsdSearch& s) {
  const std::size_t n = std::max<std::size_t>(s.grid_points, 2);
  std::vector<double> grid;
  const double t1 = s.omega_ref > 0.0 ? 1.0 / s.omega_ref : t_max;
  if (t1 >= t_max) {
    grid.reserve(n);
    for (std::size_t k = 0; k < n; ++k) grid.push_back(t_max * static_cast<double>(k) / static_cast<double>(n - 1));
  } else {
    grid.reserve(n + kLinearHead);
    for (std::size_t k = 0; k < kLinearHead; ++k)
      grid.push_back(t1 * static_cast<double>(k) / static_cast<double>(kLinearHead));
    const double ratio = std::log(t_max / t1);
    for (std::size_t k = 0; k < n; ++k)
      grid.push_back(t1 * std::exp(ratio * static_cast<double>(k) / static_cast<double>(n - 1)));
  }
  grid.back() = t_max;
  return grid;
}

double clamp01(double c) { return std::clamp(c, 0.0, 1.0); }

std::optional<double> curve_crossing(const std::vector<double>& t, const std::vector<double>& v, double level,
                                     std::size_t* index = nullptr) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] > level) continue;
    if (index != nullptr) *index = k;
    if (k == 0) return 0.0;
    const double w = (v[k - 1] - level) / (v[k - 1] - v[k]);
    return t[k - 1] + w * (t[k] - t[k - 1]);
  }
  return std::nullopt;
}

Scenario with_value(const Scenario& base, SweepAxis axis, double value) {
  Scenario s = base;
  if (axis == SweepAxis::kR) {
    s.state.r = value;
  } else if (axis == SweepAxis::kA2) {
    if (!(value >= 0.0 && value <= 1.0)) throw ParameterError("sweep: |a|^2 must lie in [0, 1]");
    s.state.a = Complex(std::sqrt(value), 0.0);
  }
  s.state.validate();
  return s;
}

ConcurrenceCurve sample_curve(const WitnessFn& f, double t_max, std::size_t n) {
  if (n < 2) throw ParameterError("sweep: curve_samples must be >= 2");
  ConcurrenceCurve c;
  c.times.resize(n);
  c.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    c.times[k] = t_max * static_cast<double>(k) / static_cast<double>(n - 1);
    c.values[k] = clamp01(f(c.times[k]));
  }
  return c;
}

MonteCarloResult run_monte_carlo(const Scenario& s, double t_max) {
  if (!s.sim) throw ParameterError("sweep: the monte carlo channel needs a SimConfig");
  SimConfig cfg = *s.sim;
  cfg.qubit_a = s.qubit_a;
  cfg.qubit_b = s.qubit_b;
  cfg.t_max = t_max;
  cfg.n_samples = s.curve_samples;
  return monte_carlo_concurrence(ewl_state(s.state), cfg);
}

SweepRow analytic_row(const Scenario& s, Channel channel, double value) {
  const WitnessFn f = channel_witness(channel, s);
  const EsdSearch search{.omega_ref = s.qubit_a.omega};
  SweepRow row;
  row.value = value;
  row.curve = sample_curve(f, s.curve_t_max, s.curve_samples);
  row.esd = find_esd_time(f, s.esd_horizon, s.tol, search);
  row.bell_threshold = first_crossing(f, kBellViolationThreshold, s.esd_horizon, s.tol, search);
  return row;
}

}  // namespace

std::string_view to_string(EsdMethod m) {
  switch (m) {
    case EsdMethod::kClosedForm: return "closed_form";
    case EsdMethod::kBisection: return "bisection";
    case EsdMethod::kGrid: return "grid";
  }
  return "unknown";
}

std::string_view to_string(Channel c) {
  switch (c) {
    case Channel::kAdiabatic: return "adiabatic";
    case Channel::kInterplay: return "interplay";
    case Channel::kMonteCarlo: return "montecarlo";
  }
  return "unknown";
}

ESDResult first_crossing(const WitnessFn& f, double level, double t_max, double tol, const EsdSearch& search) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ParameterError("first_crossing: t_max must be positive");
  if (!(tol > 0.0)) throw ParameterError("first_crossing: tol must be positive");

  ESDResult out;
  if (f(0.0) <= level) {
    out.time = EsdTime::never_entangled();
    return out;
  }
  const std::vector<double> grid = scan_grid(t_max, search);
  std::size_t hit = 0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (f(grid[k]) <= level) {
      hit = k;
      break;
    }
  }
  if (hit == 0) {
    out.time = EsdTime::infinite();
    out.t_lo = t_max;
    out.t_hi = t_max;
    return out;
  }

  double lo = grid[hit - 1];
  double hi = grid[hit];
  for (int i = 0; i < kMaxBisections && hi - lo > 0.25 * tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= level ? hi : lo) = mid;
  }
  out.t_lo = lo;
  out.t_hi = hi;
  out.method = EsdMethod::kBisection;
  out.time = EsdTime::finite(0.5 * (lo + hi));

  if (hi < t_max && search.tail_probes > 0) {
    const double ratio = std::log(t_max / hi);
    for (std::size_t k = 1; k <= search.tail_probes; ++k) {
      const double t = hi * std::exp(ratio * static_cast<double>(k) / static_cast<double>(search.tail_probes));
      if (f(t) > level) {
        out.monotone_after = false;
        break;
      }
    }
  }
  return out;
}

ESDResult find_esd_time(const WitnessFn& f, double t_max, double tol, const EsdSearch& search) {
  return first_crossing(f, 0.0, t_max, tol, search);
}

ESDResult first_crossing(const ConcurrenceCurve& curve, double level) {
  curve.validate();
  if (curve.times.empty()) throw ParameterError("first_crossing: empty curve");
  ESDResult out;
  out.method = EsdMethod::kGrid;
  std::size_t k = 0;
  const auto t = curve_crossing(curve.times, curve.values, level, &k);
  if (!t) {
    out.time = EsdTime::infinite();
    out.t_lo = out.t_hi = curve.times.back();
  } else if (k == 0) {
    out.time = EsdTime::never_entangled();
  } else {
    out.time = EsdTime::finite(*t);
    out.t_lo = curve.times[k - 1];
    out.t_hi = curve.times[k];
    for (std::size_t j = k + 1; j < curve.values.size(); ++j)
      if (curve.values[j] > level) out.monotone_after = false;
  }
  if (curve.has_stderr()) {
    std::vector<double> lower(curve.values.size()), upper(curve.values.size());
    for (std::size_t j = 0; j < curve.values.size(); ++j) {
      lower[j] = curve.values[j] - 2.0 * curve.stderr_values[j];
      upper[j] = curve.values[j] + 2.0 * curve.stderr_values[j];
    }
    const double inf = std::numeric_limits<double>::infinity();
    out.stat_lo = curve_crossing(curve.times, lower, level).value_or(inf);
    out.stat_hi = curve_crossing(curve.times, upper, level).value_or(inf);
  }
  return out;
}

ESDResult find_esd_time(const ConcurrenceCurve& curve) { return first_crossing(curve, 0.0); }

WitnessFn channel_witness(Channel channel, const Scenario& scenario) {
  scenario.state.validate();
  scenario.qubit_a.validate();
  scenario.qubit_b.validate();
  if (scenario.quantum) scenario.quantum->validate();
  switch (channel) {
    case Channel::kAdiabatic:
      return [qa = scenario.qubit_a, qb = scenario.qubit_b, st = scenario.state](double t) {
        return adiabatic_witness(t, qa, qb, st);
      };
    case Channel::kInterplay:
      return [qa = scenario.qubit_a, qb = scenario.qubit_b, q = scenario.quantum, m = scenario.model,
              rho0 = ewl_state(scenario.state)](double t) {
        return 2.0 * xstate_witness(evolve_two_qubit(t, rho0, qa, qb, q, m)).best();
      };
    case Channel::kMonteCarlo:
      break;
  }
  throw ParameterError("channel_witness: the monte carlo channel has no analytic witness");
}

std::vector<SweepRow> sweep(SweepAxis axis, const Scenario& scenario, const std::vector<double>& grid,
                            Channel channel, unsigned workers) {
  if (grid.empty()) throw ParameterError("sweep: empty grid");
  if (channel == Channel::kMonteCarlo && !scenario.sim)
    throw ParameterError("sweep: the monte carlo channel needs a SimConfig");
  if (!(scenario.curve_t_max > 0.0) || !(scenario.esd_horizon > 0.0))
    throw ParameterError("sweep: time spans must be positive");

  std::vector<SweepRow> rows(grid.size());
  if (axis == SweepAxis::kTime) {
    for (double t : grid)
      if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterError("sweep: times must be finite and >= 0");
    SweepRow whole;
    if (channel == Channel::kMonteCarlo) {
      const double t_end = *std::max_element(grid.begin(), grid.end());
      const MonteCarloResult mc = run_monte_carlo(scenario, t_end > 0.0 ? t_end : scenario.curve_t_max);
      whole.esd = find_esd_time(mc.curve);
      whole.bell_threshold = first_crossing(mc.curve, kBellViolationThreshold);
      const auto& ct = mc.curve.times;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto it = std::lower_bound(ct.begin(), ct.end(), grid[i]);
        const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - ct.begin()), ct.size() - 1);
        const std::size_t j = k == 0 ? 0 : k - 1;
        const double w = ct[k] == ct[j] ? 1.0 : (grid[i] - ct[j]) / (ct[k] - ct[j]);
        auto lerp = [&](const std::vector<double>& v) { return v[j] + w * (v[k] - v[j]); };
        rows[i].value = grid[i];
        rows[i].curve.times = {grid[i]};
        rows[i].curve.values = {clamp01(lerp(mc.curve.values))};
        rows[i].curve.stderr_values = {lerp(mc.curve.stderr_values)};
      }
    } else {
      const WitnessFn f = channel_witness(channel, scenario);
      const EsdSearch search{.omega_ref = scenario.qubit_a.omega};
      whole.esd = find_esd_time(f, scenario.esd_horizon, scenario.tol, search);
      whole.bell_threshold = first_crossing(f, kBellViolationThreshold, scenario.esd_horizon, scenario.tol, search);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        rows[i].value = grid[i];
        rows[i].curve.times = {grid[i]};
        rows[i].curve.values = {clamp01(f(grid[i]))};
      }
    }
    for (auto& row : rows) {
      row.esd = whole.esd;
      row.bell_threshold = whole.bell_threshold;
    }
    return rows;
  }

  if (channel == Channel::kMonteCarlo) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Scenario s = with_value(scenario, axis, grid[i]);
      const MonteCarloResult mc = run_monte_carlo(s, s.curve_t_max);
      rows[i].value = grid[i];
      rows[i].curve = mc.curve;
      rows[i].esd = find_esd_time(mc.curve);
      rows[i].bell_threshold = first_crossing(mc.curve, kBellViolationThreshold);
    }
    return rows;
  }

  std::vector<Scenario> scenarios;
  scenarios.reserve(grid.size());
  for (double v : grid) scenarios.push_back(with_value(scenario, axis, v));
  parallel_for(grid.size(), worker_count(workers),
               [&](std::size_t i) { rows[i] = analytic_row(scenarios[i], channel, grid[i]); });
  return rows;
}

}  // namespace esdlab
