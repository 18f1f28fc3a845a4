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

#include "boxlab/simplex.hpp"

#include <cstddef>
#include <optional>

#include "boxlab/error.hpp"

namespace boxlab {

namespace {

struct Tableau {
  // rows_[i] holds the coefficients of constraint i followed by its rhs.
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;  // number of variable columns (rhs excluded)
  int pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
    ++pivots;
  }

  Rational reduced_cost(const std::vector<Rational>& cost, std::size_t c) const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) z += cost[basis[i]] * rows[i][c];
    return cost[c] - z;
  }

  // Maximizes cost over columns flagged in `allowed`. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < columns; ++c) {
        if (!allowed[c]) continue;
        if (reduced_cost(cost, c) > 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& a = rows[i][*entering];
        if (a <= 0) continue;
        Rational ratio = rows[i][columns] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m_eq = lp.eq_lhs.size();
  const std::size_t m_ub = lp.ub_lhs.size();
  if (lp.eq_rhs.size() != m_eq || lp.ub_rhs.size() != m_ub) throw InvalidInput("LP: rhs length mismatch");
  for (const auto& row : lp.eq_lhs)
    if (row.size() != n) throw InvalidInput("LP: constraint row has wrong length");
  for (const auto& row : lp.ub_lhs)
    if (row.size() != n) throw InvalidInput("LP: constraint row has wrong length");

  // Columns: originals [0, n), slacks [n, n + m_ub), artificials [n + m_ub, n + m_ub + m).
  const std::size_t m = m_eq + m_ub;
  const std::size_t slack0 = n;
  const std::size_t art0 = n + m_ub;
  Tableau t;
  t.columns = n + m_ub + m;
  t.rows.assign(m, std::vector<Rational>(t.columns + 1, Rational(0)));
  t.basis.assign(m, 0);

  for (std::size_t i = 0; i < m; ++i) {
    auto& row = t.rows[i];
    const bool is_eq = i < m_eq;
    const auto& lhs = is_eq ? lp.eq_lhs[i] : lp.ub_lhs[i - m_eq];
    Rational rhs = is_eq ? lp.eq_rhs[i] : lp.ub_rhs[i - m_eq];
    for (std::size_t j = 0; j < n; ++j) row[j] = lhs[j];
    if (!is_eq) row[slack0 + (i - m_eq)] = 1;
    if (rhs < 0) {
      for (auto& v : row) v = -v;
      rhs = -rhs;
    }
    row[t.columns] = rhs;
    row[art0 + i] = 1;
    t.basis[i] = art0 + i;
  }

  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(t.columns, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  std::vector<bool> allowed(t.columns, true);
  t.optimize(phase1, allowed);

  LpSolution sol;
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= art0) infeasibility += t.rows[i][t.columns];
  if (infeasibility != 0) {
    sol.status = LpStatus::Infeasible;
    sol.pivots = t.pivots;
    return sol;
  }

  // Drive zero-valued artificials out of the basis; rows with no candidate are redundant.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < art0; ++c)
      if (t.rows[i][c] != 0) {
        col = c;
        break;
      }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  std::vector<Rational> phase2(t.columns, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  for (std::size_t c = art0; c < t.columns; ++c) allowed[c] = false;
  const bool bounded = t.optimize(phase2, allowed);
  sol.pivots = t.pivots;
  if (!bounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rows[i][t.columns];
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];
  return sol;
}

}  // namespace boxlab
