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

// Numerical tolerances and physical constants shared by the library and its
// tests. Everything that compares floating-point values against a contract
// threshold should take the threshold from here.

namespace esdlab {

namespace tol {

// DensityMatrix4 invariants.
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPositivity = 1e-10;

// Input check for the Hermitian eigensolver.
inline constexpr double kEigenInputHermiticity = 1e-10;

// SingleQubitMap invariants.
inline constexpr double kMapTrace = 1e-12;
inline constexpr double kMapHermiticity = 1e-12;

// Default threshold used by xstate_concurrence to accept an X state.
inline constexpr double kXState = 1e-10;

// Default relative tolerance of the ESD root finder.
inline constexpr double kEsdRelative = 1e-12;

// Per-trajectory unitarity budget of the Monte Carlo propagator.
inline constexpr double kUnitarity = 1e-10;

}  // namespace tol

namespace phys {

// CODATA 2018 exact values.
inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K

}  // namespace phys

// Above this Sigma/Omega ratio the static-path treatment of 1/f noise is
// outside its usual regime of validity. Reported, never enforced.
inline constexpr double kSpaSigmaOverOmegaWarning = 0.2;

// C = 1/sqrt(2): below this value a Bell-CHSH violation is no longer
// guaranteed for the states studied here.
inline constexpr double kBellViolationThreshold = 0.70710678118654752440;

}  // namespace esdlab
