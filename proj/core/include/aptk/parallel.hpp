// Copyright 2026 The aptk Authors
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

#include <cstdlib>
#include <thread>
#include <vector>

namespace aptk {

// Effective thread count for randomized campaigns. A request of 0 asks for
// full hardware concurrency; APT_NUM_THREADS caps whatever was requested
// (APT_NUM_THREADS=0 forces serial execution). Results never depend on the
// outcome, only wall-clock does.
inline int resolve_threads(int requested) {
  unsigned hw = std::thread::hardware_concurrency();
  if (requested <= 0) requested = hw > 0 ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("APT_NUM_THREADS")) {
    int cap = std::atoi(env);
    if (cap <= 0) return 1;
    if (requested > cap) requested = cap;
  }
  if (hw > 0 && requested > static_cast<int>(hw)) requested = static_cast<int>(hw);
  return requested > 1 ? requested : 1;
}

// Runs body(i) for i in [0, n). Work is split into static blocks; the caller
// writes results into per-index slots so the merge order is fixed.
template <typename F>
void parallel_for(std::size_t n, int threads, F&& body) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t lo = static_cast<std::size_t>(t) * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace aptk
