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

#include <optional>

#include "esdlab/adiabatic.hpp"
#include "esdlab/qmath.hpp"
#include "esdlab/states.hpp"

namespace esdlab {

/// White high-frequency noise at the qubit splitting and bath temperature.
/// T1 = 2 / s_white, T2 = 2 T1.
struct QuantumNoiseParams {
  double s_white = 2e6;       // S_f(Omega), 1/s
  double temperature = 0.04;  // K

  void validate() const;
  /// Relaxation time; +inf when s_white == 0.
  double t1() const;
  double t2() const { return 2.0 * t1(); }
};

struct GibbsPopulations {
  double p0_inf = 0.5;
  double p1_inf = 0.5;
};

/// Asymptotic populations with p1 - p0 = -tanh(hbar Omega / (2 kB T)).
GibbsPopulations gibbs_populations(double omega, double temperature);

/// How the single-qubit coherence combines adiabatic and quantum noise.
enum class CoherenceModel {
  /// z_SPA(t) * exp(-t / 2T1): the SPA factor times Markovian decay. Exact
  /// match to the Bell-state closed forms.
  kFactorized,
  /// (1 + (-i Omega + 1/T1) sigma^2 t / Omega^2)^(-1/2) exp(-t / 2T1) at
  /// theta = pi/2, keeping the 1/T1 cross term inside the logarithm. Falls
  /// back to kFactorized at other operating points.
  kLogCrossTerm,
};

/// Transfer tensor for one qubit under adiabatic plus quantum noise:
///   populations relax to Gibbs values with rate 1/T1,
///   rho_01(t) = exp(+i Omega t) kappa(t) rho_01(0).
/// Secular: no population <-> coherence terms.
SingleQubitMap single_qubit_map(double t, const AdiabaticParams& adiabatic,
                                const QuantumNoiseParams& quantum,
                                CoherenceModel model = CoherenceModel::kFactorized);

/// Adiabatic noise only: frozen populations, rho_01 picks up exp(+i Omega t) z_SPA(t).
SingleQubitMap adiabatic_map(double t, const AdiabaticParams& adiabatic);

/// <ij|rho(t)|i'j'> = sum A_{ii'}^{ll'} B_{jj'}^{mm'} <lm|rho0|l'm'>
DensityMatrix4 compose_two_qubit(const DensityMatrix4& rho0, const SingleQubitMap& map_a,
                                 const SingleQubitMap& map_b);

/// single_qubit_map (or adiabatic_map when `quantum` is empty) on each qubit,
/// composed on rho0.
DensityMatrix4 evolve_two_qubit(double t, const DensityMatrix4& rho0, const AdiabaticParams& qubit_a,
                                const AdiabaticParams& qubit_b,
                                const std::optional<QuantumNoiseParams>& quantum,
                                CoherenceModel model = CoherenceModel::kFactorized);

/// Unclamped 2K for an initial Bell state (r = 1, a = 1/sqrt 2) on identical
/// resonant qubits at theta = pi/2:
///   Phi: K = e^{-t/T1} M / 2 - sqrt(p0 p1) (1 - e^{-t/T1})
///            sqrt((p0^2 + p1^2) e^{-t/T1} + p0 p1 (1 + e^{-2t/T1}))
///   Psi: K = e^{-t/T1} M / 2 - (1 - e^{-t/T1}) ((p0^2 + p1^2) e^{-t/T1} + 2 p0 p1) / 2
/// with M = 1 / sqrt(1 + sigma^4 (t / Omega)^2).
/// Throws ParameterError away from theta = pi/2.
double interplay_witness_bell(double t, BellFlavor flavor, const AdiabaticParams& adiabatic,
                              const QuantumNoiseParams& quantum);

/// max(0, interplay_witness_bell).
double interplay_concurrence_bell(double t, BellFlavor flavor, const AdiabaticParams& adiabatic,
                                  const QuantumNoiseParams& quantum);

}  // namespace esdlab
