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

#include "boxlab/box.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "boxlab/error.hpp"

namespace boxlab {

std::string to_string(Party party) { return party == Party::Alice ? "alice" : "bob"; }

std::string to_string(Valuation valuation) {
  return valuation == Valuation::Signed ? "signed" : "raw";
}

Valuation parse_valuation(const std::string& name) {
  if (name == "signed") return Valuation::Signed;
  if (name == "raw" || name == "raw01") return Valuation::Raw01;
  throw InvalidInput("unknown valuation '" + name + "' (expected signed or raw)");
}

BipartiteBox new_box(const BipartiteBox::Table& table) {
  BipartiteBox::Table p = table;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i])) throw NegativeProbability("table entry " + std::to_string(i) + " is not finite");
    if (p[i] < -kNegativeClamp) {
      std::ostringstream msg;
      msg << "table entry " << i << " is negative (" << p[i] << ")";
      throw NegativeProbability(msg.str());
    }
    if (p[i] < 0.0) p[i] = 0.0;
  }
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double sum = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) sum += p[table_index(x, y, a, b)];
      if (std::abs(sum - 1.0) > kNormalizationTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "slice (x=" << x << ", y=" << y << ") sums to " << sum;
        throw NormalizationError(msg.str());
      }
    }
  }
  return BipartiteBox(p);
}

BipartiteBox pr_box() {
  BipartiteBox::Table p{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) p[table_index(x, y, a, b)] = ((a ^ b) == (x & y)) ? 0.5 : 0.0;
  return new_box(p);
}

BipartiteBox uniform_box() {
  BipartiteBox::Table p;
  p.fill(0.25);
  return new_box(p);
}

BipartiteBox deterministic_box(std::array<int, 2> fa, std::array<int, 2> fb) {
  for (int v : {fa[0], fa[1], fb[0], fb[1]})
    if (v != 0 && v != 1) throw InvalidInput("deterministic strategy outputs must be 0 or 1");
  BipartiteBox::Table p{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) p[table_index(x, y, fa[x], fb[y])] = 1.0;
  return new_box(p);
}

BipartiteBox input_copy_box() {
  BipartiteBox::Table p{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a) p[table_index(x, y, a, x)] = 0.5;
  return new_box(p);
}

BipartiteBox mix(std::span<const BipartiteBox> boxes, std::span<const double> weights) {
  if (boxes.empty()) throw WeightError("mix needs at least one box");
  if (boxes.size() != weights.size()) throw WeightError("mix: boxes and weights differ in length");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw WeightError("mix: weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > kNormalizationTol) throw WeightError("mix: weights must sum to 1");
  BipartiteBox::Table p{};
  for (std::size_t k = 0; k < boxes.size(); ++k)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += weights[k] * boxes[k].table()[i];
  return new_box(p);
}

double marginal_a(const BipartiteBox& box, int a, int x, std::optional<int> y) {
  if (y) return box(x, *y, a, 0) + box(x, *y, a, 1);
  return 0.5 * (marginal_a(box, a, x, 0) + marginal_a(box, a, x, 1));
}

double marginal_b(const BipartiteBox& box, int b, int y, std::optional<int> x) {
  if (x) return box(*x, y, 0, b) + box(*x, y, 1, b);
  return 0.5 * (marginal_b(box, b, y, 0) + marginal_b(box, b, y, 1));
}

NsResult is_nonsignaling(const BipartiteBox& box, double tol) {
  NsWitness witness;
  for (int input = 0; input < 2; ++input) {
    for (int out = 0; out < 2; ++out) {
      double gap_a = std::abs(marginal_a(box, out, input, 0) - marginal_a(box, out, input, 1));
      if (gap_a > tol) witness.violations.push_back({Party::Alice, out, input, {0, 1}, gap_a});
      double gap_b = std::abs(marginal_b(box, out, input, 0) - marginal_b(box, out, input, 1));
      if (gap_b > tol) witness.violations.push_back({Party::Bob, out, input, {0, 1}, gap_b});
    }
  }
  bool ok = witness.empty();
  return {ok, std::move(witness)};
}

double correlator(const BipartiteBox& box, int x, int y, Valuation valuation) {
  double c = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      c += box(x, y, a, b) * outcome_value(valuation, a) * outcome_value(valuation, b);
  // A slice may sum to 1 + ulp; keep the value inside the valuation's range.
  return std::clamp(c, valuation == Valuation::Signed ? -1.0 : 0.0, 1.0);
}

double chsh(const BipartiteBox& box, Valuation valuation) {
  return correlator(box, 0, 0, valuation) + correlator(box, 0, 1, valuation) +
         correlator(box, 1, 0, valuation) - correlator(box, 1, 1, valuation);
}

SymmetryResult sequential_symmetry_check(const BipartiteBox& box, double tol) {
  double worst = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          double joint = box(x, y, a, b);
          if (joint <= 0.0) continue;
          double pa_xy = marginal_a(box, a, x, y);
          double pb_xy = marginal_b(box, b, y, x);
          if (pa_xy <= 0.0 || pb_xy <= 0.0) continue;
          double b_then_a = (joint / pb_xy) * marginal_b(box, b, y);
          double a_then_b = (joint / pa_xy) * marginal_a(box, a, x);
          worst = std::max(worst, std::abs(b_then_a - a_then_b));
        }
      }
    }
  }
  return {worst <= tol, worst};
}

std::pair<int, int> sample(const BipartiteBox& box, int x, int y, Rng& rng) {
  double u = uniform01(rng);
  double cumulative = 0.0;
  std::pair<int, int> last{0, 0};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      double p = box(x, y, a, b);
      if (p <= 0.0) continue;
      cumulative += p;
      last = {a, b};
      if (u < cumulative) return last;
    }
  }
  // Rounding left the cumulative sum just below u.
  return last;
}

}  // namespace boxlab
