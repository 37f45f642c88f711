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

#include <limits>

namespace esdlab {

/// Entanglement sudden-death time. Infinite and "never entangled" are
/// explicit tags, not sentinel floats.
class EsdTime {
 public:
  enum class Kind { kFinite, kInfinite, kNeverEntangled };

  static EsdTime finite(double seconds) { return EsdTime(Kind::kFinite, seconds); }
  static EsdTime infinite() { return EsdTime(Kind::kInfinite, 0.0); }
  /// The state is separable at t = 0; the ESD time is 0.
  static EsdTime never_entangled() { return EsdTime(Kind::kNeverEntangled, 0.0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::kInfinite; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }
  bool never_entangled_flag() const { return kind_ == Kind::kNeverEntangled; }

  /// Seconds; +inf for the infinite tag, 0 when never entangled.
  double seconds() const {
    return kind_ == Kind::kInfinite ? std::numeric_limits<double>::infinity() : seconds_;
  }

 private:
  EsdTime(Kind kind, double seconds) : kind_(kind), seconds_(seconds) {}
  Kind kind_;
  double seconds_;
};

}  // namespace esdlab
