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

// Brute-force grid oracles for the factorization system u_i v_j = t_ij.
// Test and benchmark code only; the library never calls these.

#include <array>

#include "boxlab/toy_model.hpp"

namespace boxlab::oracle {

struct GridResult {
  double min_residual;  // min over the grid of max_ij |u_i v_j - t_ij|
  std::array<double, 2> u;
  std::array<double, 2> v;
};

/// Every point of {k / steps : k = -steps..steps}^4, OpenMP over u0.
GridResult grid_search(const Targets& t, int steps = 100);
/// Single-threaded reference of grid_search; identical result including the argmin.
GridResult grid_search_serial(const Targets& t, int steps = 100);
/// Same minimum over the same grid, using that v0 and v1 enter disjoint
/// residual terms once (u0, u1) is fixed: O(steps^3) instead of O(steps^4).
GridResult grid_search_separable(const Targets& t, int steps = 100);

}  // namespace boxlab::oracle
