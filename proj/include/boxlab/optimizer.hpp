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
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boxlab/box.hpp"
#include "boxlab/operators.hpp"

namespace boxlab {

/// Local deterministic strategy a = fa[x], b = fb[y].
struct ClassicalStrategy {
  std::array<int, 2> fa;
  std::array<int, 2> fb;
};

/// Observables in +1/-1 form and the joint state.
struct QuantumWitness {
  std::array<Observable, 2> alice;
  std::array<Observable, 2> bob;
  QuantumState state;
};

using OptimizationWitness = std::variant<ClassicalStrategy, QuantumWitness, BipartiteBox>;

struct OptimizationReport {
  double value = 0.0;
  OptimizationWitness witness;
  int iterations = 0;
  bool converged = false;
  /// Set when the first sweep left the starting point unchanged.
  bool stationary = false;
  std::optional<std::string> warning;
  /// Best restart's objective after every half step and state update.
  std::vector<double> trace;
};

/// Exhaustive search over the 16 deterministic strategies (Signed valuation),
/// maximizing |chsh|; ties go to the lexicographically first (fa0, fa1, fb0, fb1).
OptimizationReport classical_max();

/// Value of every deterministic strategy, in lexicographic order.
std::vector<std::pair<ClassicalStrategy, double>> classical_values();

struct SeesawOptions {
  int dim = 2;
  int restarts = 5;
  int max_iters = 500;
  std::uint64_t seed = 0;
  double improvement_tol = 1e-10;
  /// Start every restart from all-identity observables instead of a random draw.
  bool identity_start = false;
};

/// Alternating maximization of the CHSH operator expectation. Restarts run in
/// parallel, each on its own substream; the best (lowest index on ties) wins.
OptimizationReport seesaw_quantum_max(const SeesawOptions& options);

/// Linear Bell functional on the signed correlators: sum of sign[x][y] * Cxy.
enum class BellFunctional { Chsh, AllPlus };

/// Exact LP over the non-signaling polytope. With chsh_cut set, also imposes
/// |chsh| <= cut.
OptimizationReport nonsignaling_max(BellFunctional functional = BellFunctional::Chsh,
                                    std::optional<int> chsh_cut = std::nullopt);

/// Evaluates a witness with the independent evaluator (chsh on boxes,
/// operator expectation on quantum witnesses).
double evaluate_witness(const OptimizationWitness& witness, BellFunctional functional = BellFunctional::Chsh);

}  // namespace boxlab
