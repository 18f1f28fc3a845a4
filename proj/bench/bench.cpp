// Copyright 2026 The boxlab Authors
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

// Wall-clock comparison of the OpenMP kernels against their serial references.
// Usage: boxlab_bench [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "boxlab/ensembles.hpp"
#include "boxlab/game.hpp"
#include "grid_search.hpp"

using namespace boxlab;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<void()>& parallel, const std::function<void()>& serial) {
  const double tp = best_of(repeats, parallel);
  const double ts = best_of(repeats, serial);
  std::printf("%-28s %10.4f %10.4f %8.2fx\n", name, ts, tp, ts / tp);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  const Targets t{{{1, 1}, {1, -1}}};
  row("grid_search 81^4", repeats, [&] { oracle::grid_search(t, 40); }, [&] { oracle::grid_search_serial(t, 40); });

  const BipartiteBox pr = pr_box();
  row("play 4M rounds", repeats, [&] { play(pr, 4000000, 1); }, [&] { play_serial(pr, 4000000, 1); });

  row("tsirelson_ensemble 2000", repeats, [] { tsirelson_ensemble(2000, 2, 1); },
      [] { tsirelson_ensemble_serial(2000, 2, 1); });

  row("landau_ensemble 1000 d=3", repeats, [] { landau_ensemble(1000, 3, ObservableFamily::Bounded, 1); },
      [] { landau_ensemble_serial(1000, 3, ObservableFamily::Bounded, 1); });
}
