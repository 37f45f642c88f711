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

#include <cstddef>
#include <functional>

namespace esdlab {

/// Number of worker threads to use. A positive `requested` wins; otherwise
/// the hardware concurrency, capped by the ESDLAB_THREADS environment
/// variable when it is set to a positive integer.
unsigned worker_count(unsigned requested = 0);

/// Runs task(0) ... task(n_tasks - 1) on up to `workers` threads. Tasks must
/// write to disjoint outputs; the first exception thrown by a task is
/// rethrown after all workers have joined.
void parallel_for(std::size_t n_tasks, unsigned workers, const std::function<void(std::size_t)>& task);

}  // namespace esdlab
