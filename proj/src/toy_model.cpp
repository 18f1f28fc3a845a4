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

#include "boxlab/toy_model.hpp"

#include <cmath>
#include <sstream>
#include <tuple>

#include "boxlab/error.hpp"

namespace boxlab {

AngleCorrelationModel::AngleCorrelationModel(std::vector<std::pair<double, double>> table, Directions directions)
    : table_(std::move(table)), directions_(directions) {
  for (auto& [angle, value] : table_) {
    if (!(std::abs(value) <= 1.0)) throw InvalidInput("correlation values must lie in [-1, 1]");
    angle = std::abs(angle);
  }
}

std::optional<double> AngleCorrelationModel::correlation(double angle) const {
  const double key = std::abs(angle);
  for (const auto& [a, value] : table_)
    if (std::abs(a - key) <= 1e-12) return value;
  return std::nullopt;
}

AngleCorrelationModel pr_toy_model() {
  return AngleCorrelationModel({{kPi / 4, +1.0}, {3 * kPi / 4, -1.0}},
                               {.a = kPi / 2, .a_prime = 0.0, .b = kPi / 4, .b_prime = 3 * kPi / 4});
}

double chsh_from_model(const AngleCorrelationModel& model) {
  const auto& d = model.directions();
  auto e = [&model](double alice, double bob, const char* label) {
    auto v = model.correlation(alice, bob);
    if (!v) {
      std::ostringstream msg;
      msg << "no tabulated correlation for " << label << " (angle " << std::abs(alice - bob) << ")";
      throw MissingAngle(msg.str());
    }
    return *v;
  };
  return e(d.a, d.b, "AB") + e(d.a, d.b_prime, "AB'") + e(d.a_prime, d.b, "A'B") - e(d.a_prime, d.b_prime, "A'B'");
}

FeasibilitySystem::FeasibilitySystem(const Targets& t) : targets(t) {
  for (const auto& row : t)
    for (double v : row)
      if (!(std::abs(v) <= 1.0)) throw InvalidInput("feasibility targets must lie in [-1, 1]");
}

std::string to_string(FailedTest test) {
  switch (test) {
    case FailedTest::Sign:
      return "sign";
    case FailedTest::Magnitude:
      return "magnitude";
    case FailedTest::ZeroPattern:
      return "zero_pattern";
    case FailedTest::Verification:
      return "verification";
  }
  return "unknown";
}

namespace {

double max_residual(const Targets& t, const std::array<double, 2>& u, const std::array<double, 2>& v) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(u[i] * v[j] - t[i][j]));
  return r;
}

// Rank-one factorization of the nonzero block rows x cols (every entry nonzero),
// scaled so |u| <= 1 and |v| <= 1. Returns the failing certificate otherwise.
std::variant<std::pair<std::array<double, 2>, std::array<double, 2>>, Infeasible> solve_block(
    const Targets& t, const std::vector<int>& rows, const std::vector<int>& cols, double tol) {
  if (rows.size() == 2 && cols.size() == 2) {
    int sign = 1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sign *= t[i][j] > 0 ? 1 : -1;
    if (sign < 0) {
      std::ostringstream msg;
      msg << "each factor appears in two targets, so the product of the four target signs must be +1; it is -1";
      return Infeasible{FailedTest::Sign, -1.0, msg.str()};
    }
    const double det = t[0][0] * t[1][1] - t[0][1] * t[1][0];
    if (std::abs(det) > tol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "t00*t11 = " << t[0][0] * t[1][1] << " but t01*t10 = " << t[0][1] * t[1][0];
      return Infeasible{FailedTest::Magnitude, det, msg.str()};
    }
  }
  // Pivot on the largest entry: u[i] = t[i][j*] / t[i*][j*], v[j] = t[i*][j].
  int pi = rows.front(), pj = cols.front();
  for (int i : rows)
    for (int j : cols)
      if (std::abs(t[i][j]) > std::abs(t[pi][pj])) {
        pi = i;
        pj = j;
      }
  std::array<double, 2> u{0.0, 0.0}, v{0.0, 0.0};
  for (int i : rows) u[i] = t[i][pj] / t[pi][pj];
  for (int j : cols) v[j] = t[pi][j];
  return std::pair{u, v};
}

}  // namespace

FeasibilityResult separable_feasibility(const FeasibilitySystem& system, double tol) {
  const Targets& t = system.targets;
  auto is_zero = [&](int i, int j) { return std::abs(t[i][j]) <= tol; };

  std::optional<Infeasible> first_failure;
  // Bits 0,1: u0,u1 forced to zero; bits 2,3: v0,v1 forced to zero.
  for (int pattern = 0; pattern < 16; ++pattern) {
    const bool u_zero[2] = {(pattern & 1) != 0, (pattern & 2) != 0};
    const bool v_zero[2] = {(pattern & 4) != 0, (pattern & 8) != 0};
    bool consistent = true;
    for (int i = 0; i < 2 && consistent; ++i)
      for (int j = 0; j < 2 && consistent; ++j) {
        const bool product_zero = u_zero[i] || v_zero[j];
        if (product_zero != is_zero(i, j)) consistent = false;
      }
    if (!consistent) continue;

    std::vector<int> rows, cols;
    for (int i = 0; i < 2; ++i)
      if (!u_zero[i]) rows.push_back(i);
    for (int j = 0; j < 2; ++j)
      if (!v_zero[j]) cols.push_back(j);

    std::array<double, 2> u{0.0, 0.0}, v{0.0, 0.0};
    if (!rows.empty() && !cols.empty()) {
      auto block = solve_block(t, rows, cols, tol);
      if (auto* fail = std::get_if<Infeasible>(&block)) {
        if (!first_failure) first_failure = *fail;
        continue;
      }
      std::tie(u, v) = std::get<0>(block);
    }
    const double residual = max_residual(t, u, v);
    if (residual <= tol) return Feasible{u, v, residual};
    if (!first_failure) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "constructed factors leave a residual of " << residual;
      first_failure = Infeasible{FailedTest::Verification, residual, msg.str()};
    }
  }
  if (first_failure) return *first_failure;

  // No zero assignment matches the zero targets.
  double offending = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!is_zero(i, j) && (is_zero(i, 1 - j) || is_zero(1 - i, j))) offending = t[i][j];
  std::ostringstream msg;
  msg.precision(17);
  msg << "a zero target forces a factor to vanish, which zeroes the target " << offending;
  return Infeasible{FailedTest::ZeroPattern, offending, msg.str()};
}

InconsistencyReport product_state_inconsistency_report() {
  const AngleCorrelationModel model = pr_toy_model();
  const auto& d = model.directions();
  auto eq = [&model](std::string label, double alice, double bob) {
    return FactorEquation{std::move(label), alice, bob, *model.correlation(alice, bob)};
  };
  std::array<FactorEquation, 4> equations{eq("AB", d.a, d.b), eq("AB'", d.a, d.b_prime), eq("A'B", d.a_prime, d.b),
                                          eq("A'B'", d.a_prime, d.b_prime)};
  // u = (<S_A (x) I>, <S_A' (x) I>), v = (<I (x) S_B>, <I (x) S_B'>).
  FeasibilitySystem system(
      Targets{{{equations[0].target, equations[1].target}, {equations[2].target, equations[3].target}}});
  FeasibilityResult result = separable_feasibility(system);

  std::vector<std::string> argument;
  auto sign_word = [](double v) { return v > 0 ? "> 0" : "< 0"; };
  for (const auto& e : equations) {
    std::ostringstream line;
    line << "<" << e.label << "> = " << (e.target > 0 ? "+1" : "-1") << " forces u_" << e.label.substr(0, e.label[1] == '\'' ? 2 : 1)
         << " * v_" << e.label.substr(e.label[1] == '\'' ? 2 : 1) << " " << sign_word(e.target);
    argument.push_back(line.str());
  }
  argument.push_back("(u_A' v_B')(u_A v_B) = (u_A' v_B)(u_A v_B'), a product of two positive numbers");
  argument.push_back("so u_A' v_B' > 0 follows from the first three equations, contradicting <A'B'> = -1");
  return {equations, system, result, argument};
}

}  // namespace boxlab
