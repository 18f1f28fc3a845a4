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

#pragma once

// Seeded generators for the property tests.

#include <array>
#include <cstdint>
#include <cmath>
#include <random>
#include <vector>

#include "boxlab/box.hpp"
#include "boxlab/rng.hpp"

namespace boxlab::testing {

/// A random normalized table. With `sparse`, about a third of the entries are zero.
inline BipartiteBox random_box(Rng& rng, bool sparse = false) {
  BipartiteBox::Table t{};
  for (int s = 0; s < 4; ++s) {
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
      double w = -std::log(1.0 - uniform01(rng));
      if (sparse && uniform01(rng) < 0.33) w = 0.0;
      t[4 * s + k] = w;
      total += w;
    }
    if (total == 0.0) {
      t[4 * s] = 1.0;
      total = 1.0;
    }
    for (int k = 0; k < 4; ++k) t[4 * s + k] /= total;
  }
  return new_box(t);
}

/// A random non-signaling box: a convex mixture of local deterministic boxes and the PR box.
inline BipartiteBox random_ns_box(Rng& rng) {
  std::vector<BipartiteBox> parts;
  std::vector<double> w;
  double total = 0.0;
  for (int i = 0; i < 17; ++i) {
    parts.push_back(i == 16 ? pr_box()
                            : deterministic_box({i & 1, (i >> 1) & 1}, {(i >> 2) & 1, (i >> 3) & 1}));
    w.push_back(-std::log(1.0 - uniform01(rng)));
    total += w.back();
  }
  for (double& x : w) x /= total;
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) s += w[i];
  w.back() = 1.0 - s;
  return mix(parts, w);
}

}  // namespace boxlab::testing
