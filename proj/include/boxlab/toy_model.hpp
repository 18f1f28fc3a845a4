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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace boxlab {

inline constexpr double kPi = 3.14159265358979323846;

/// Correlation function of a spin-angle model, given only at tabulated angle
/// differences. Values between table entries are not interpolated.
class AngleCorrelationModel {
 public:
  struct Directions {
    double a;        // A
    double a_prime;  // A'
    double b;        // B
    double b_prime;  // B'
  };

  /// Throws InvalidInput if a value lies outside [-1, 1].
  AngleCorrelationModel(std::vector<std::pair<double, double>> table, Directions directions);

  /// E at an angle difference, matched within 1e-12; nullopt when untabulated.
  std::optional<double> correlation(double angle) const;
  /// E for the pair (alice_angle, bob_angle); keyed on |alice - bob|.
  std::optional<double> correlation(double alice_angle, double bob_angle) const {
    return correlation(alice_angle - bob_angle);
  }

  const std::vector<std::pair<double, double>>& table() const { return table_; }
  const Directions& directions() const { return directions_; }

 private:
  std::vector<std::pair<double, double>> table_;
  Directions directions_;
};

/// E(pi/4) = +1, E(3pi/4) = -1 with A' = 0, B = pi/4, A = pi/2, B' = 3pi/4.
AngleCorrelationModel pr_toy_model();

/// E(AB) + E(AB') + E(A'B) - E(A'B'). Throws MissingAngle.
double chsh_from_model(const AngleCorrelationModel& model);

using Targets = std::array<std::array<double, 2>, 2>;

/// u[i] v[j] = targets[i][j] with every variable in [-1, 1]. Row i is Alice's
/// factor, column j Bob's.
struct FeasibilitySystem {
  Targets targets;
  /// Throws InvalidInput unless every |t| <= 1.
  explicit FeasibilitySystem(const Targets& t);
};

struct Feasible {
  std::array<double, 2> u;
  std::array<double, 2> v;
  double max_residual;
};

enum class FailedTest { Sign, Magnitude, ZeroPattern, Verification };
std::string to_string(FailedTest test);

struct Infeasible {
  FailedTest test;
  /// Sign test: product of the four signs (-1). Magnitude test: t00 t11 - t01 t10.
  /// Zero pattern: the offending nonzero target. Verification: the residual.
  double violating_value;
  std::string detail;
};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

inline constexpr double kFeasibilityTol = 1e-9;

/// Decides solvability of the factorization system. Targets with |t| <= tol
/// count as zero and force a zero factor; the solver branches over which
/// factors vanish. Nonzero blocks go through the sign test, then the
/// determinant test, then a constructive solve that is verified.
FeasibilityResult separable_feasibility(const FeasibilitySystem& system, double tol = kFeasibilityTol);

struct FactorEquation {
  std::string label;  // e.g. "A'B'"
  double alice_angle;
  double bob_angle;
  double target;
};

struct InconsistencyReport {
  std::array<FactorEquation, 4> equations;  // AB, AB', A'B, A'B'
  FeasibilitySystem system;
  FeasibilityResult result;
  std::vector<std::string> argument;
};

/// Factorized system of the PR toy model for a product state, its verdict,
/// and the sign-chain argument.
InconsistencyReport product_state_inconsistency_report();

}  // namespace boxlab
