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

#include <complex>

#include "esdlab/qmath.hpp"

namespace esdlab {

/// Which Bell-like pure part an extended Werner-like state carries:
///   Phi = a|01> + b|10>  (one excitation)
///   Psi = a|00> + b|11>  (two excitations)
enum class BellFlavor { kPhi, kPsi };

/// Extended Werner-like state r|Bell><Bell| + (1 - r)/4 I.
///
/// `a` may be complex. `b` is determined by |a|^2 + |b|^2 = 1 up to its phase,
/// carried separately in `b_phase` (radians). The concurrence depends only on
/// |a b|; the phases survive into coherences and are propagated unchanged.
struct EWLParams {
  double r = 1.0;
  Complex a = Complex(0.70710678118654752440, 0.0);
  BellFlavor flavor = BellFlavor::kPsi;
  double b_phase = 0.0;

  Complex b() const;
  /// |a b|
  double amplitude_product() const;
  /// Throws ParameterError if r is outside [0, 1] or |a| > 1.
  void validate() const;
};

/// Convenience: real a = sqrt(a2).
EWLParams ewl_params(double r, double a2, BellFlavor flavor, double b_phase = 0.0);

DensityMatrix4 ewl_state(const EWLParams& p);

/// 2 max{0, (|ab| + 1/4) r - 1/4}: the concurrence of ewl_state(p).
double ewl_initial_concurrence(const EWLParams& p);

/// The two X-state witnesses
///   K1 = |rho_12| - sqrt(rho_00 rho_33),  K2 = |rho_03| - sqrt(rho_11 rho_22).
struct XStateWitness {
  double k1 = 0.0;
  double k2 = 0.0;
  double best() const { return k1 > k2 ? k1 : k2; }
};

/// K1 and K2 without the X-form check. Callers that need a guarantee use
/// xstate_concurrence.
XStateWitness xstate_witness(const DensityMatrix4& rho);

/// 2 max{0, K1, K2}. Throws ParameterError when rho is not an X state within
/// tol::kXState; use wootters_concurrence for general states.
double xstate_concurrence(const DensityMatrix4& rho);

/// r* = 1 / (1 + 4|ab|): EWL states are entangled iff r > r*.
double critical_purity(Complex a);

}  // namespace esdlab
