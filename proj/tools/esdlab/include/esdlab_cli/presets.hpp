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

#include <string>
#include <vector>

#include "esdlab_cli/scenario.hpp"

namespace esdlab::cli {

/// Figure presets: the parameters of each figure as a scenario.
///   fig1a, fig1b  adiabatic noise only, theta = pi/2, sigma = 0.02 omega
///   fig2, fig3    adiabatic plus quantum noise, S_f = 2e6 1/s, T = 0.04 K
///   fig4a, fig4b  1/f noise in [1, 1e6] 1/s, Monte Carlo; fig4b detunes
///                 qubit B to 1.2 omega and couples with g = 1e9 rad/s
ScenarioConfig preset(const std::string& name);
const std::vector<std::string>& preset_names();

}  // namespace esdlab::cli
