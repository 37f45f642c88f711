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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "esdlab/error.hpp"
#include "esdlab/random.hpp"
#include "esdlab/stochastic.hpp"

namespace esdlab {

namespace {

void check_band(double gamma_min, double gamma_max) {
  if (!(gamma_min > 0.0) || !std::isfinite(gamma_max) || !(gamma_max > gamma_min))
    throw ParameterError("fluctuator band requires 0 < gamma_min < gamma_max < inf");
}

}  // namespace

void ConcurrenceCurve::validate() const {
  if (values.size() != times.size()) throw InvariantError("curve: times/values size mismatch");
  if (has_stderr() && stderr_values.size() != times.size())
    throw InvariantError("curve: stderr size mismatch");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1])) throw InvariantError("curve: times not increasing");
  for (double c : values)
    if (!(c >= 0.0 && c <= 1.0)) throw InvariantError("curve: concurrence outside [0, 1]");
}

double FluctuatorEnsemble::total_variance() const {
  double s = 0.0;
  for (double v : couplings) s += v * v;
  return s;
}

void FluctuatorEnsemble::validate() const {
  check_band(gamma_min, gamma_max);
  if (couplings.size() != rates.size() || initial_states.size() != rates.size())
    throw ParameterError("fluctuator ensemble: field sizes differ");
  for (double g : rates)
    if (!(g >= gamma_min && g <= gamma_max)) throw ParameterError("fluctuator rate outside [gamma_min, gamma_max]");
  for (double v : couplings)
    if (!std::isfinite(v)) throw ParameterError("fluctuator coupling must be finite");
  for (int s : initial_states)
    if (s != 1 && s != -1) throw ParameterError("fluctuator state must be +1 or -1");
}

FluctuatorEnsemble sample_ensemble(std::size_t n, double gamma_min, double gamma_max, double sigma,
                                   std::uint64_t seed) {
  if (n == 0) throw ParameterError("sample_ensemble: need at least one fluctuator");
  check_band(gamma_min, gamma_max);
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ParameterError("sample_ensemble: sigma must be >= 0");

  Rng rng(seed);
  std::vector<std::size_t> strata(n);
  std::iota(strata.begin(), strata.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i + 1));
    std::swap(strata[i], strata[std::min(j, i)]);
  }

  FluctuatorEnsemble ens;
  ens.gamma_min = gamma_min;
  ens.gamma_max = gamma_max;
  ens.rates.resize(n);
  ens.couplings.assign(n, sigma / std::sqrt(static_cast<double>(n)));
  ens.initial_states.resize(n);
  const double log_ratio = std::log(gamma_max / gamma_min);
  for (std::size_t j = 0; j < n; ++j) {
    const double u = (static_cast<double>(strata[j]) + rng.uniform()) / static_cast<double>(n);
    ens.rates[j] = std::min(gamma_min * std::exp(u * log_ratio), std::nextafter(gamma_max, 0.0));
  }
  for (std::size_t j = 0; j < n; ++j) ens.initial_states[j] = rng.sign();
  return ens;
}

RtnPaths rtn_paths(const FluctuatorEnsemble& ens, double t_max, std::uint64_t seed,
                   InitialStates initial) {
  ens.validate();
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ParameterError("rtn_paths: t_max must be finite and >= 0");

  Rng rng(seed);
  RtnPaths paths;
  paths.t_max = t_max;
  paths.initial_states = ens.initial_states;
  paths.switch_times.resize(ens.size());
  for (std::size_t j = 0; j < ens.size(); ++j) {
    if (initial == InitialStates::kResample) paths.initial_states[j] = rng.sign();
    auto& out = paths.switch_times[j];
    for (double t = rng.exponential(ens.rates[j]); t < t_max; t += rng.exponential(ens.rates[j]))
      out.push_back(t);
  }
  return paths;
}

double NoiseTrace::value_at(double t) const {
  if (times.empty()) return 0.0;
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return values.front();
  return values[static_cast<std::size_t>(it - times.begin()) - 1];
}

NoiseTrace noise_trace(const FluctuatorEnsemble& ens, const RtnPaths& paths) {
  if (paths.switch_times.size() != ens.size() || paths.initial_states.size() != ens.size())
    throw ParameterError("noise_trace: paths do not match the ensemble");

  struct Event {
    double time;
    std::size_t index;
  };
  std::vector<Event> events;
  std::size_t total = 0;
  for (const auto& s : paths.switch_times) total += s.size();
  events.reserve(total);
  for (std::size_t j = 0; j < ens.size(); ++j)
    for (double t : paths.switch_times[j]) events.push_back({t, j});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.time < b.time || (a.time == b.time && a.index < b.index);
  });

  std::vector<int> state = paths.initial_states;
  double x = 0.0;
  for (std::size_t j = 0; j < ens.size(); ++j) x += ens.couplings[j] * state[j];

  NoiseTrace trace;
  trace.times.reserve(total + 1);
  trace.values.reserve(total + 1);
  trace.times.push_back(0.0);
  trace.values.push_back(x);
  for (const Event& e : events) {
    x -= 2.0 * ens.couplings[e.index] * state[e.index];
    state[e.index] = -state[e.index];
    if (e.time == trace.times.back()) {
      trace.values.back() = x;
    } else {
      trace.times.push_back(e.time);
      trace.values.push_back(x);
    }
  }
  return trace;
}

}  // namespace esdlab
