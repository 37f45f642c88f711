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

#include "esdlab/esd_time.hpp"
#include "esdlab/qmath.hpp"
#include "esdlab/states.hpp"

namespace esdlab {

/// One qubit coupled to low-frequency (1/f) noise.
///
///   H = -(1/2) Omega (sin(theta) sx + cos(theta) sz) - (1/2) X(t) sz
///
/// X has a Gaussian stationary distribution of width `sigma`; its spectrum is
/// 1/f between `gamma_min` and `gamma_max`.
struct AdiabaticParams {
  double omega = 1e11;       // rad/s
  double theta = 1.5707963267948966;  // rad
  double sigma = 2e9;        // rad/s
  double gamma_min = 1.0;    // 1/s
  double gamma_max = 1e6;    // 1/s

  /// Throws ParameterError when any field is outside its domain.
  void validate() const;
  /// sigma / omega above kSpaSigmaOverOmegaWarning.
  bool outside_spa_regime() const;
};

/// Static-path coherence factor z(t) = < exp(+i dw(X) t) >_X with the
/// longitudinal splitting shift dw(X) = cos(theta) X + sin^2(theta) X^2/(2 Omega)
/// averaged over the Gaussian X. Closed form:
///   z = (1 - i y)^(-1/2) exp(-(c sigma t)^2 / (2 (1 - i y))),  y = s^2 sigma^2 t / Omega.
/// The sign of the phase follows rho_01 ~ exp(+i Omega t) for the Hamiltonian
/// above; the modulus does not depend on it.
Complex spa_coherence(double t, const AdiabaticParams& p);

/// |z(t)| = exp(-(c sigma t)^2 / (2 (1 + y^2))) / (1 + y^2)^(1/4).
double spa_coherence_modulus(double t, const AdiabaticParams& p);

/// Unclamped 2 r |ab| |z_A| |z_B| - (1 - r)/2. Identical for both flavours.
double adiabatic_witness(double t, const AdiabaticParams& qubit_a, const AdiabaticParams& qubit_b,
                         const EWLParams& state);

/// max(0, adiabatic_witness).
double adiabatic_concurrence(double t, const AdiabaticParams& qubit_a,
                             const AdiabaticParams& qubit_b, const EWLParams& state);

/// Closed-form ESD time for identical qubits at theta = pi/2 with equal sigma:
///   t = (Omega / sigma^2) sqrt(16 |ab|^2 r^2 / (1 - r)^2 - 1).
EsdTime esd_time_optimal(const EWLParams& state, double sigma, double omega);

/// Closed-form ESD time for identical qubits at theta = 0 with equal sigma:
///   t = sqrt(ln(4 |ab| r / (1 - r))) / sigma.
EsdTime esd_time_dephasing(const EWLParams& state, double sigma);

}  // namespace esdlab
