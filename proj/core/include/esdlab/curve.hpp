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

#include <vector>

namespace esdlab {

/// Concurrence sampled on an ascending time grid, with an optional standard
/// error per point (Monte Carlo curves).
struct ConcurrenceCurve {
  std::vector<double> times;   // s, strictly increasing
  std::vector<double> values;  // in [0, 1]
  std::vector<double> stderr_values;  // empty, or one per point

  bool has_stderr() const { return !stderr_values.empty(); }
  /// Throws InvariantError on a malformed curve.
  void validate() const;
};

}  // namespace esdlab
