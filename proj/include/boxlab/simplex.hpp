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

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace boxlab {

using Rational = boost::multiprecision::cpp_rational;

/// maximize c.x  subject to  eq_lhs x = eq_rhs,  ub_lhs x <= ub_rhs,  x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> eq_lhs;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> ub_lhs;
  std::vector<Rational> ub_rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
  int pivots = 0;
};

/// Two-phase dense tableau simplex in exact rational arithmetic with Bland's
/// rule, so it terminates on degenerate problems and returns a vertex.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace boxlab
