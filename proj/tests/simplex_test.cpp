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

#include "boxlab/simplex.hpp"

using namespace boxlab;

TEST_CASE("solve_lp small problems") {
  // max x + y  s.t.  x + 2y <= 4,  3x + y <= 6.  Optimum (8/5, 6/5), value 14/5.
  LinearProgram lp;
  lp.objective = {1, 1};
  lp.ub_lhs = {{1, 2}, {3, 1}};
  lp.ub_rhs = {4, 6};
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == Rational(14, 5));
  CHECK(s.x[0] == Rational(8, 5));
  CHECK(s.x[1] == Rational(6, 5));

  LinearProgram unbounded;
  unbounded.objective = {1, 0};
  unbounded.ub_lhs = {{0, 1}};
  unbounded.ub_rhs = {1};
  CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);

  LinearProgram infeasible;
  infeasible.objective = {1};
  infeasible.eq_lhs = {{1}};
  infeasible.eq_rhs = {-1};
  CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);
}

TEST_CASE("solve_lp handles redundant equalities and degeneracy") {
  // x + y = 1 stated twice; max 2x + y  -> x = 1.
  LinearProgram lp;
  lp.objective = {2, 1};
  lp.eq_lhs = {{1, 1}, {2, 2}};
  lp.eq_rhs = {1, 2};
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == 2);

  // Beale's cycling example is solved under Bland's rule.
  LinearProgram beale;
  beale.objective = {Rational(3, 4), -150, Rational(1, 50), -6};
  beale.ub_lhs = {{Rational(1, 4), -60, Rational(-1, 25), 9}, {Rational(1, 2), -90, Rational(-1, 50), 3}, {0, 0, 1, 0}};
  beale.ub_rhs = {0, 0, 1};
  LpSolution b = solve_lp(beale);
  REQUIRE(b.status == LpStatus::Optimal);
  CHECK(b.value == Rational(1, 20));
}
