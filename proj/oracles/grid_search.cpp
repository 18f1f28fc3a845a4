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

#include "grid_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace boxlab::oracle {

namespace {

struct Best {
  double residual = std::numeric_limits<double>::infinity();
  int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
};

std::vector<double> grid(int steps) {
  std::vector<double> g(static_cast<std::size_t>(2 * steps + 1));
  for (int k = -steps; k <= steps; ++k) g[static_cast<std::size_t>(k + steps)] = static_cast<double>(k) / steps;
  return g;
}

// All (u1, v0, v1) for a fixed u0 index.
Best scan_u0(const Targets& t, const std::vector<double>& g, int i0) {
  const int n = static_cast<int>(g.size());
  const double u0 = g[static_cast<std::size_t>(i0)];
  Best best;
  for (int i1 = 0; i1 < n; ++i1) {
    const double u1 = g[static_cast<std::size_t>(i1)];
    for (int j0 = 0; j0 < n; ++j0) {
      const double v0 = g[static_cast<std::size_t>(j0)];
      const double r0 = std::max(std::abs(u0 * v0 - t[0][0]), std::abs(u1 * v0 - t[1][0]));
      if (r0 >= best.residual) continue;
      for (int j1 = 0; j1 < n; ++j1) {
        const double v1 = g[static_cast<std::size_t>(j1)];
        const double r = std::max(r0, std::max(std::abs(u0 * v1 - t[0][1]), std::abs(u1 * v1 - t[1][1])));
        if (r < best.residual) best = {r, i0, i1, j0, j1};
      }
    }
  }
  return best;
}

GridResult to_result(const Best& b, const std::vector<double>& g) {
  auto at = [&g](int k) { return g[static_cast<std::size_t>(k)]; };
  return {b.residual, {at(b.i0), at(b.i1)}, {at(b.j0), at(b.j1)}};
}

// Rows are scanned in index order and ties keep the earlier row, so the
// reduction matches the serial loop exactly.
Best merge(const std::vector<Best>& rows) {
  Best best;
  for (const Best& b : rows)
    if (b.residual < best.residual) best = b;
  return best;
}

}  // namespace

GridResult grid_search(const Targets& t, int steps) {
  const auto g = grid(steps);
  const int n = static_cast<int>(g.size());
  std::vector<Best> rows(g.size());
#pragma omp parallel for schedule(dynamic)
  for (int i0 = 0; i0 < n; ++i0) rows[static_cast<std::size_t>(i0)] = scan_u0(t, g, i0);
  return to_result(merge(rows), g);
}

GridResult grid_search_serial(const Targets& t, int steps) {
  const auto g = grid(steps);
  std::vector<Best> rows;
  for (int i0 = 0; i0 < static_cast<int>(g.size()); ++i0) rows.push_back(scan_u0(t, g, i0));
  return to_result(merge(rows), g);
}

GridResult grid_search_separable(const Targets& t, int steps) {
  const auto g = grid(steps);
  const int n = static_cast<int>(g.size());
  std::vector<Best> rows(g.size());
#pragma omp parallel for schedule(static)
  for (int i0 = 0; i0 < n; ++i0) {
    const double u0 = g[static_cast<std::size_t>(i0)];
    Best best;
    for (int i1 = 0; i1 < n; ++i1) {
      const double u1 = g[static_cast<std::size_t>(i1)];
      double r0 = std::numeric_limits<double>::infinity(), r1 = r0;
      int j0 = 0, j1 = 0;
      for (int j = 0; j < n; ++j) {
        const double v = g[static_cast<std::size_t>(j)];
        const double a = std::max(std::abs(u0 * v - t[0][0]), std::abs(u1 * v - t[1][0]));
        const double b = std::max(std::abs(u0 * v - t[0][1]), std::abs(u1 * v - t[1][1]));
        if (a < r0) {
          r0 = a;
          j0 = j;
        }
        if (b < r1) {
          r1 = b;
          j1 = j;
        }
      }
      const double r = std::max(r0, r1);
      if (r < best.residual) best = {r, i0, i1, j0, j1};
    }
    rows[static_cast<std::size_t>(i0)] = best;
  }
  return to_result(merge(rows), g);
}

}  // namespace boxlab::oracle
