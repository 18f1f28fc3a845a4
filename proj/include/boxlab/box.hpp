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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/rng.hpp"

namespace boxlab {

enum class Party { Alice, Bob };

std::string to_string(Party party);

/// Map from a raw output k in {0,1} to the number entering correlators.
/// Raw01 keeps k, Signed maps k to (-1)^k.
enum class Valuation { Raw01, Signed };

inline double outcome_value(Valuation valuation, int k) {
  return valuation == Valuation::Signed ? (k == 0 ? 1.0 : -1.0) : static_cast<double>(k);
}

std::string to_string(Valuation valuation);
Valuation parse_valuation(const std::string& name);

/// Flat index of p(a, b | x, y) in a 16-entry table, nested [x][y][a][b].
constexpr std::size_t table_index(int x, int y, int a, int b) {
  return static_cast<std::size_t>(((x * 2 + y) * 2 + a) * 2 + b);
}

/// A 2-input 2-output bipartite box: the conditional table p(a, b | x, y).
/// Instances are always normalized and nonnegative; construct through
/// new_box() or one of the named constructors below.
class BipartiteBox {
 public:
  using Table = std::array<double, 16>;

  double operator()(int x, int y, int a, int b) const { return p_[table_index(x, y, a, b)]; }
  const Table& table() const { return p_; }

  friend bool operator==(const BipartiteBox&, const BipartiteBox&) = default;

 private:
  explicit BipartiteBox(const Table& p) : p_(p) {}
  friend BipartiteBox new_box(const Table& table);

  Table p_;
};

inline constexpr double kNormalizationTol = 1e-12;
inline constexpr double kNegativeClamp = 1e-15;
inline constexpr double kDefaultTol = 1e-9;

/// Validates a table. Entries in [-1e-15, 0) are clamped to zero.
/// Throws NormalizationError or NegativeProbability.
BipartiteBox new_box(const BipartiteBox::Table& table);

/// p = 1/2 when a xor b == x*y, else 0.
BipartiteBox pr_box();
BipartiteBox uniform_box();
/// Local deterministic strategy: a = fa[x], b = fb[y].
BipartiteBox deterministic_box(std::array<int, 2> fa, std::array<int, 2> fb);
/// Signaling example: Alice outputs a fair coin, Bob outputs Alice's input (b = x).
BipartiteBox input_copy_box();

/// Convex combination. Throws WeightError on empty input, length mismatch,
/// negative weights, or weights not summing to 1 within 1e-12.
BipartiteBox mix(std::span<const BipartiteBox> boxes, std::span<const double> weights);

/// P(a | x, y), or the uniform average over y when y is omitted.
double marginal_a(const BipartiteBox& box, int a, int x, std::optional<int> y = std::nullopt);
/// P(b | x, y), or the uniform average over x when x is omitted.
double marginal_b(const BipartiteBox& box, int b, int y, std::optional<int> x = std::nullopt);

struct NsViolation {
  Party party;
  int output;
  int input;
  std::array<int, 2> other_inputs;  // the two values of the other party's input being compared
  double gap;
};

struct NsWitness {
  std::vector<NsViolation> violations;
  bool empty() const { return violations.empty(); }
};

struct NsResult {
  bool nonsignaling;
  NsWitness witness;
};

NsResult is_nonsignaling(const BipartiteBox& box, double tol = kDefaultTol);

double correlator(const BipartiteBox& box, int x, int y, Valuation valuation = Valuation::Signed);

/// C00 + C01 + C10 - C11.
double chsh(const BipartiteBox& box, Valuation valuation = Valuation::Signed);

struct SymmetryResult {
  bool holds;
  double max_residual;
};

/// Compares P(a|b,x,y) P(b|y) with P(b|a,x,y) P(a|x) over every entry with
/// p(x,y,a,b) > 0; single-party marginals use the uniform-average convention.
SymmetryResult sequential_symmetry_check(const BipartiteBox& box, double tol = kDefaultTol);

/// Draws (a, b) from the (x, y) slice with one uniform variate.
std::pair<int, int> sample(const BipartiteBox& box, int x, int y, Rng& rng);

}  // namespace boxlab
