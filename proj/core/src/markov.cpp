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

#include "esdlab/markov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "esdlab/constants.hpp"
#include "esdlab/error.hpp"

namespace esdlab {

void QuantumNoiseParams::validate() const {
  if (!(s_white >= 0.0) || !std::isfinite(s_white)) {
    std::ostringstream msg;
    msg << "s_white must be non-negative and finite, got " << s_white;
    throw ParameterError(msg.str());
  }
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    std::ostringstream msg;
    msg << "temperature must be positive, got " << temperature;
    throw ParameterError(msg.str());
  }
}

double QuantumNoiseParams::t1() const {
  return s_white > 0.0 ? 2.0 / s_white : std::numeric_limits<double>::infinity();
}

GibbsPopulations gibbs_populations(double omega, double temperature) {
  if (!(omega > 0.0) || !(temperature > 0.0)) {
    std::ostringstream msg;
    msg << "gibbs_populations: need omega > 0 and T > 0, got omega=" << omega << ", T=" << temperature;
    throw ParameterError(msg.str());
  }
  const double x = phys::kHbar * omega / (2.0 * phys::kBoltzmann * temperature);
  // (1 -+ tanh x)/2 written without cancellation.
  GibbsPopulations g;
  g.p1_inf = 1.0 / (1.0 + std::exp(2.0 * x));
  g.p0_inf = 1.0 / (1.0 + std::exp(-2.0 * x));
  return g;
}

namespace {

SingleQubitMap make_map(double pop_decay, const GibbsPopulations& gibbs, Complex coherence) {
  SingleQubitMap m;
  const double p[2] = {gibbs.p0_inf, gibbs.p1_inf};
  for (int i = 0; i < 2; ++i)
    for (int l = 0; l < 2; ++l) m(i, i, l, l) = (i == l ? pop_decay : 0.0) + p[i] * (1.0 - pop_decay);
  m(0, 1, 0, 1) = coherence;
  m(1, 0, 1, 0) = std::conj(coherence);
  return m;
}

void check_time(double t) {
  if (!(t >= 0.0)) {
    std::ostringstream msg;
    msg << "time must be non-negative, got " << t;
    throw ParameterError(msg.str());
  }
}

bool at_optimal_point(const AdiabaticParams& p) { return std::abs(p.theta - std::numbers::pi / 2) <= 1e-12; }

}  // namespace

SingleQubitMap single_qubit_map(double t, const AdiabaticParams& adiabatic,
                                const QuantumNoiseParams& quantum, CoherenceModel model) {
  check_time(t);
  adiabatic.validate();
  quantum.validate();
  const double t1 = quantum.t1();
  const double decay = std::isinf(t1) ? 1.0 : std::exp(-t / t1);
  const double half_decay = std::isinf(t1) ? 1.0 : std::exp(-t / (2.0 * t1));
  const Complex free = std::polar(1.0, adiabatic.omega * t);

  Complex kappa;
  if (model == CoherenceModel::kLogCrossTerm && at_optimal_point(adiabatic)) {
    const double rate = std::isinf(t1) ? 0.0 : 1.0 / t1;
    const double scale = adiabatic.sigma * adiabatic.sigma * t / (adiabatic.omega * adiabatic.omega);
    const Complex w = 1.0 + Complex(rate, -adiabatic.omega) * scale;
    kappa = half_decay / std::sqrt(w);
  } else {
    kappa = spa_coherence(t, adiabatic) * half_decay;
  }
  return make_map(decay, gibbs_populations(adiabatic.omega, quantum.temperature), free * kappa);
}

SingleQubitMap adiabatic_map(double t, const AdiabaticParams& adiabatic) {
  check_time(t);
  adiabatic.validate();
  const Complex coherence = std::polar(1.0, adiabatic.omega * t) * spa_coherence(t, adiabatic);
  return make_map(1.0, GibbsPopulations{}, coherence);
}

DensityMatrix4 compose_two_qubit(const DensityMatrix4& rho0, const SingleQubitMap& map_a,
                                 const SingleQubitMap& map_b) {
  map_a.validate();
  map_b.validate();
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip)
      for (int j = 0; j < 2; ++j)
        for (int jp = 0; jp < 2; ++jp) {
          Complex acc = 0.0;
          for (int l = 0; l < 2; ++l)
            for (int lp = 0; lp < 2; ++lp) {
              const Complex a = map_a(i, ip, l, lp);
              if (a == 0.0) continue;
              for (int m = 0; m < 2; ++m)
                for (int mp = 0; mp < 2; ++mp) {
                  const Complex b = map_b(j, jp, m, mp);
                  if (b == 0.0) continue;
                  acc += a * b * rho0(2 * l + m, 2 * lp + mp);
                }
            }
          out(2 * i + j, 2 * ip + jp) = acc;
        }
  return DensityMatrix4(out);
}

DensityMatrix4 evolve_two_qubit(double t, const DensityMatrix4& rho0, const AdiabaticParams& qubit_a,
                                const AdiabaticParams& qubit_b,
                                const std::optional<QuantumNoiseParams>& quantum,
                                CoherenceModel model) {
  if (quantum) {
    return compose_two_qubit(rho0, single_qubit_map(t, qubit_a, *quantum, model),
                             single_qubit_map(t, qubit_b, *quantum, model));
  }
  return compose_two_qubit(rho0, adiabatic_map(t, qubit_a), adiabatic_map(t, qubit_b));
}

double interplay_witness_bell(double t, BellFlavor flavor, const AdiabaticParams& adiabatic,
                              const QuantumNoiseParams& quantum) {
  check_time(t);
  adiabatic.validate();
  quantum.validate();
  if (!at_optimal_point(adiabatic)) {
    throw ParameterError("interplay closed forms hold only at theta = pi/2");
  }
  const double t1 = quantum.t1();
  const double g = std::isinf(t1) ? 1.0 : std::exp(-t / t1);
  const double s2 = adiabatic.sigma * adiabatic.sigma;
  const double y = s2 * t / adiabatic.omega;
  const double coherence = 0.5 * g / std::sqrt(1.0 + y * y);
  const auto [p0, p1] = gibbs_populations(adiabatic.omega, quantum.temperature);
  const double same = p0 * p0 + p1 * p1;

  double k = 0.0;
  if (flavor == BellFlavor::kPhi) {
    k = coherence - std::sqrt(p0 * p1) * (1.0 - g) * std::sqrt(same * g + p0 * p1 * (1.0 + g * g));
  } else {
    k = coherence - 0.5 * (1.0 - g) * (same * g + 2.0 * p0 * p1);
  }
  return 2.0 * k;
}

double interplay_concurrence_bell(double t, BellFlavor flavor, const AdiabaticParams& adiabatic,
                                  const QuantumNoiseParams& quantum) {
  return std::clamp(interplay_witness_bell(t, flavor, adiabatic, quantum), 0.0, 1.0);
}

}  // namespace esdlab
