// Copyright 2026 The qgame Authors
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

#ifndef QGAME_PARALLEL_HPP_
#define QGAME_PARALLEL_HPP_

#include <cstdint>

#ifdef QGAME_USE_OPENMP
#include <omp.h>
#endif

namespace qgame {

enum class Execution { kSerial, kParallel };

// Calls f(i) for i in [0, n). Iterations must be independent; results are
// written to per-index slots so the outcome never depends on scheduling.
template <typename F>
void parallel_for(std::int64_t n, F&& f, Execution exec = Execution::kParallel) {
#ifdef QGAME_USE_OPENMP
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::int64_t i = 0; i < n; ++i) f(i);
}

inline int max_threads() {
#ifdef QGAME_USE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qgame

#endif  // QGAME_PARALLEL_HPP_
