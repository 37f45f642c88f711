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

#include "esdlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "esdlab/constants.hpp"
#include "esdlab/error.hpp"

namespace esdlab {

Complex EWLParams::b() const {
  const double mag = std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
  return std::polar(mag, b_phase);
}

double EWLParams::amplitude_product() const { return std::abs(a) * std::abs(b()); }

void EWLParams::validate() const {
  if (!(r >= 0.0 && r <= 1.0)) {
    std::ostringstream msg;
    msg << "purity r must lie in [0, 1], got " << r;
    throw ParameterError(msg.str());
  }
  if (!(std::abs(a) <= 1.0 + 1e-15)) {
    std::ostringstream msg;
    msg << "amplitude |a| must not exceed 1, got " << std::abs(a);
    throw ParameterError(msg.str());
  }
  if (!std::isfinite(b_phase)) throw ParameterError("b_phase must be finite");
}

EWLParams ewl_params(double r, double a2, BellFlavor flavor, double b_phase) {
  if (!(a2 >= 0.0 && a2 <= 1.0)) {
    std::ostringstream msg;
    msg << "|a|^2 must lie in [0, 1], got " << a2;
    throw ParameterError(msg.str());
  }
  EWLParams p;
  p.r = r;
  p.a = Complex(std::sqrt(a2), 0.0);
  p.flavor = flavor;
  p.b_phase = b_phase;
  p.validate();
  return p;
}

DensityMatrix4 ewl_state(const EWLParams& p) {
  p.validate();
  Vector4 bell{};
  if (p.flavor == BellFlavor::kPhi) {
    bell[1] = p.a;
    bell[2] = p.b();
  } else {
    bell[0] = p.a;
    bell[3] = p.b();
  }
  Matrix4 m = outer(bell) * Complex(p.r);
  const double mixed = (1.0 - p.r) / 4.0;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) += mixed;
  return DensityMatrix4(m);
}

double ewl_initial_concurrence(const EWLParams& p) {
  return 2.0 * std::max(0.0, (p.amplitude_product() + 0.25) * p.r - 0.25);
}

XStateWitness xstate_witness(const DensityMatrix4& rho) {
  auto pop = [&](std::size_t i) { return std::max(0.0, rho(i, i).real()); };
  XStateWitness w;
  w.k1 = std::abs(rho(1, 2)) - std::sqrt(pop(0) * pop(3));
  w.k2 = std::abs(rho(0, 3)) - std::sqrt(pop(1) * pop(2));
  return w;
}

double xstate_concurrence(const DensityMatrix4& rho) {
  if (!is_x_state(rho, tol::kXState)) {
    throw ParameterError(
        "xstate_concurrence: state is not of X form; use wootters_concurrence for general states");
  }
  return std::clamp(2.0 * xstate_witness(rho).best(), 0.0, 1.0);
}

double critical_purity(Complex a) {
  if (!(std::abs(a) <= 1.0 + 1e-15)) throw ParameterError("critical_purity: |a| must not exceed 1");
  const double ab = std::abs(a) * std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
  return 1.0 / (1.0 + 4.0 * ab);
}

}  // namespace esdlab
