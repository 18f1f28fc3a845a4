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

#include <doctest.h>

#include <cmath>

#include "boxlab/error.hpp"
#include "boxlab/rng.hpp"
#include "boxlab/toy_model.hpp"
#include "grid_search.hpp"

using namespace boxlab;

namespace {

AngleCorrelationModel with_values(double e1, double e3) {
  return AngleCorrelationModel({{kPi / 4, e1}, {3 * kPi / 4, e3}}, pr_toy_model().directions());
}

Feasible feasible(const FeasibilityResult& r) {
  REQUIRE(std::holds_alternative<Feasible>(r));
  return std::get<Feasible>(r);
}

Infeasible infeasible(const FeasibilityResult& r) {
  REQUIRE(std::holds_alternative<Infeasible>(r));
  return std::get<Infeasible>(r);
}

void check_witness(const Targets& t, const Feasible& f, double tol = 1e-9) {
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(f.u[i]) <= 1.0);
    CHECK(std::abs(f.v[i]) <= 1.0);
    for (int j = 0; j < 2; ++j) CHECK(std::abs(f.u[i] * f.v[j] - t[i][j]) <= tol);
  }
}

}  // namespace

TEST_CASE("pr_toy_model") {
  AngleCorrelationModel m = pr_toy_model();
  CHECK(m.correlation(kPi / 4) == 1.0);
  CHECK(m.correlation(3 * kPi / 4) == -1.0);
  CHECK_FALSE(m.correlation(kPi / 2).has_value());
  const auto& d = m.directions();
  for (double alice : {d.a, d.a_prime})
    for (double bob : {d.b, d.b_prime}) {
      const double diff = std::abs(alice - bob);
      CHECK((std::abs(diff - kPi / 4) < 1e-12 || std::abs(diff - 3 * kPi / 4) < 1e-12));
    }
  CHECK_THROWS_AS(AngleCorrelationModel({{0.1, 1.5}}, d), InvalidInput);
}

TEST_CASE("chsh_from_model") {
  CHECK(chsh_from_model(pr_toy_model()) == 4.0);
  CHECK(chsh_from_model(with_values(0, 0)) == 0.0);
  CHECK(chsh_from_model(with_values(1, 1)) == 2.0);
  CHECK_THROWS_AS(chsh_from_model(AngleCorrelationModel({{kPi / 4, 1.0}}, pr_toy_model().directions())),
                  MissingAngle);
  // Linear in the tabulated values.
  for (double e1 : {-1.0, -0.3, 0.5})
    for (double e3 : {-0.7, 0.2, 1.0}) CHECK(chsh_from_model(with_values(e1, e3)) == doctest::Approx(3 * e1 - e3));
}

TEST_CASE("separable_feasibility examples") {
  const Infeasible& inf = infeasible(separable_feasibility(FeasibilitySystem({{{1, 1}, {1, -1}}})));
  CHECK(inf.test == FailedTest::Sign);
  CHECK(inf.violating_value == -1.0);

  const Feasible& ones = feasible(separable_feasibility(FeasibilitySystem({{{1, 1}, {1, 1}}})));
  CHECK(ones.u == std::array{1.0, 1.0});
  CHECK(ones.v == std::array{1.0, 1.0});

  const Targets half{{{0.5, 0.5}, {0.5, 0.5}}};
  const Feasible& h = feasible(separable_feasibility(FeasibilitySystem(half)));
  check_witness(half, h);
  CHECK(h.u == std::array{1.0, 1.0});
  CHECK(h.v == std::array{0.5, 0.5});
  CHECK(oracle::grid_search_separable(half).min_residual <= 1e-12);

  CHECK_THROWS_AS(FeasibilitySystem({{{1.5, 0}, {0, 0}}}), InvalidInput);
}

TEST_CASE("separable_feasibility edge cases") {
  // Magnitude test: signs agree but the determinant does not vanish.
  const Infeasible& mag = infeasible(separable_feasibility(FeasibilitySystem({{{1, 0.5}, {0.5, 1}}})));
  CHECK(mag.test == FailedTest::Magnitude);
  CHECK(mag.violating_value == doctest::Approx(0.75));

  // Zero patterns.
  const Targets all_zero{};
  check_witness(all_zero, feasible(separable_feasibility(FeasibilitySystem(all_zero))));
  const Targets row_zero{{{0, 0}, {0.3, -0.6}}};
  check_witness(row_zero, feasible(separable_feasibility(FeasibilitySystem(row_zero))));
  const Infeasible& zp = infeasible(separable_feasibility(FeasibilitySystem({{{0, 0.5}, {0.5, 0.5}}})));
  CHECK(zp.test == FailedTest::ZeroPattern);

  // Rank one with the largest entry off the diagonal: u = (1, 0.2), v = (0.2, 1).
  const Targets scaled{{{0.2, 1.0}, {0.04, 0.2}}};
  check_witness(scaled, feasible(separable_feasibility(FeasibilitySystem(scaled))));

  // Tolerance: targets below tol count as zero.
  const Targets tiny{{{1e-12, 0.5}, {0.0, 0.0}}};
  CHECK(std::holds_alternative<Feasible>(separable_feasibility(FeasibilitySystem(tiny))));
}

TEST_CASE("product_state_inconsistency_report") {
  InconsistencyReport r = product_state_inconsistency_report();
  const Infeasible& inf = infeasible(r.result);
  CHECK(inf.test == FailedTest::Sign);
  const std::array<double, 4> expected{1, 1, 1, -1};
  for (int k = 0; k < 4; ++k) CHECK(r.equations[k].target == expected[k]);
  CHECK(r.equations[0].label == "AB");
  CHECK(r.equations[3].label == "A'B'");
  CHECK_FALSE(r.argument.empty());
  // Targets flow from the model's correlation table, not a literal.
  for (const auto& e : r.equations) CHECK(pr_toy_model().correlation(e.alice_angle, e.bob_angle) == e.target);
}

TEST_CASE("grid oracles agree with each other") {
  const Targets t{{{0.3, -0.2}, {0.9, 0.1}}};
  oracle::GridResult a = oracle::grid_search(t, 40), b = oracle::grid_search_serial(t, 40),
                     c = oracle::grid_search_separable(t, 40);
  CHECK(a.min_residual == b.min_residual);
  CHECK(a.u == b.u);
  CHECK(a.v == b.v);
  CHECK(c.min_residual == doctest::Approx(a.min_residual).epsilon(1e-12));
}

TEST_CASE("property: feasible witnesses verify") {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<double, 2> u{2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1};
    std::array<double, 2> v{2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1};
    if (trial % 5 == 0) u[trial % 2] = 0.0;
    Targets t{{{u[0] * v[0], u[0] * v[1]}, {u[1] * v[0], u[1] * v[1]}}};
    check_witness(t, feasible(separable_feasibility(FeasibilitySystem(t))));
  }
}
