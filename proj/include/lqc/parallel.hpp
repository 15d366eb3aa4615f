// Copyright 2026 The lqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace lqc {

/// Worker count: LQC_THREADS if set and positive, otherwise the hardware
/// concurrency. LQC_THREADS=0 means auto.
unsigned worker_count();

/// Calls body(i) for i in [0, n) on up to worker_count() threads. Each index
/// is visited exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception thrown by any
/// body is rethrown after all workers join. Calls made from inside a body
/// run serially on the calling thread unless `allow_nested` is set.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body,
                  bool allow_nested = false);

}  // namespace lqc
