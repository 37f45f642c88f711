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

#include "esdlab/adiabatic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "esdlab/constants.hpp"
#include "esdlab/error.hpp"

namespace esdlab {

void AdiabaticParams::validate() const {
  std::ostringstream msg;
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    msg << "omega must be positive and finite, got " << omega;
  } else if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    msg << "sigma must be non-negative and finite, got " << sigma;
  } else if (!(theta >= 0.0 && theta <= std::numbers::pi + 1e-12)) {
    msg << "theta must lie in [0, pi], got " << theta;
  } else if (!(gamma_min > 0.0 && gamma_min < gamma_max) || !std::isfinite(gamma_max)) {
    msg << "1/f band requires 0 < gamma_min < gamma_max, got [" << gamma_min << ", " << gamma_max << "]";
  } else {
    return;
  }
  throw ParameterError(msg.str());
}

bool AdiabaticParams::outside_spa_regime() const { return sigma / omega > kSpaSigmaOverOmegaWarning; }

namespace {

void check_time(double t) {
  if (!(t >= 0.0)) {
    std::ostringstream msg;
    msg << "time must be non-negative, got " << t;
    throw ParameterError(msg.str());
  }
}

}  // namespace

Complex spa_coherence(double t, const AdiabaticParams& p) {
  check_time(t);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const double y = s * s * p.sigma * p.sigma * t / p.omega;
  const Complex w(1.0, -y);
  const double cst = c * p.sigma * t;
  return std::exp(-cst * cst / (2.0 * w)) / std::sqrt(w);
}

double spa_coherence_modulus(double t, const AdiabaticParams& p) {
  check_time(t);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const double ss = s * p.sigma;
  const double q = 1.0 + ss * ss * ss * ss * (t / p.omega) * (t / p.omega);
  const double cst = c * p.sigma * t;
  return std::exp(-0.5 * cst * cst / q) / std::pow(q, 0.25);
}

double adiabatic_witness(double t, const AdiabaticParams& qubit_a, const AdiabaticParams& qubit_b,
                         const EWLParams& state) {
  return 2.0 * state.r * state.amplitude_product() * spa_coherence_modulus(t, qubit_a) *
             spa_coherence_modulus(t, qubit_b) -
         0.5 * (1.0 - state.r);
}

double adiabatic_concurrence(double t, const AdiabaticParams& qubit_a,
                             const AdiabaticParams& qubit_b, const EWLParams& state) {
  return std::max(0.0, adiabatic_witness(t, qubit_a, qubit_b, state));
}

namespace {

// 4 |ab| r / (1 - r); > 1 iff the initial state is entangled.
double entanglement_ratio(const EWLParams& state) {
  return 4.0 * state.amplitude_product() * state.r / (1.0 - state.r);
}

}  // namespace

EsdTime esd_time_optimal(const EWLParams& state, double sigma, double omega) {
  state.validate();
  if (!(omega > 0.0) || !(sigma >= 0.0)) throw ParameterError("esd_time_optimal: need omega > 0, sigma >= 0");
  if (state.r <= critical_purity(state.a)) return EsdTime::never_entangled();
  if (state.r >= 1.0 || sigma == 0.0) return EsdTime::infinite();
  const double ratio = entanglement_ratio(state);
  const double radicand = ratio * ratio - 1.0;
  if (!(radicand >= 0.0)) return EsdTime::never_entangled();
  return EsdTime::finite(omega / (sigma * sigma) * std::sqrt(radicand));
}

EsdTime esd_time_dephasing(const EWLParams& state, double sigma) {
  state.validate();
  if (!(sigma >= 0.0)) throw ParameterError("esd_time_dephasing: need sigma >= 0");
  if (state.r <= critical_purity(state.a)) return EsdTime::never_entangled();
  if (state.r >= 1.0 || sigma == 0.0) return EsdTime::infinite();
  const double log_arg = entanglement_ratio(state);
  if (!(log_arg >= 1.0)) return EsdTime::never_entangled();
  return EsdTime::finite(std::sqrt(std::log(log_arg)) / sigma);
}

}  // namespace esdlab
