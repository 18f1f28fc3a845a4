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

#include "boxlab/optimizer.hpp"

#include <cmath>
#include <limits>

#include "boxlab/error.hpp"
#include "boxlab/simplex.hpp"

namespace boxlab {

namespace {

std::array<std::array<int, 2>, 2> functional_signs(BellFunctional f) {
  if (f == BellFunctional::AllPlus) return {{{1, 1}, {1, 1}}};
  return {{{1, 1}, {1, -1}}};
}

double box_functional(const BipartiteBox& box, BellFunctional f) {
  auto s = functional_signs(f);
  double v = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) v += s[x][y] * correlator(box, x, y, Valuation::Signed);
  return v;
}

// Tr_B[ rho (I (x) k) ] for rho on dA*dB.
Matrix reduce_to_alice(const Matrix& rho, const Matrix& k, Eigen::Index da, Eigen::Index db) {
  Matrix out = Matrix::Zero(da, da);
  for (Eigen::Index ia = 0; ia < da; ++ia)
    for (Eigen::Index ja = 0; ja < da; ++ja)
      for (Eigen::Index ib = 0; ib < db; ++ib)
        for (Eigen::Index jb = 0; jb < db; ++jb) out(ia, ja) += rho(ia * db + ib, ja * db + jb) * k(jb, ib);
  return out;
}

// Tr_A[ rho (k (x) I) ].
Matrix reduce_to_bob(const Matrix& rho, const Matrix& k, Eigen::Index da, Eigen::Index db) {
  Matrix out = Matrix::Zero(db, db);
  for (Eigen::Index ib = 0; ib < db; ++ib)
    for (Eigen::Index jb = 0; jb < db; ++jb)
      for (Eigen::Index ia = 0; ia < da; ++ia)
        for (Eigen::Index ja = 0; ja < da; ++ja) out(ib, jb) += rho(ia * db + ib, ja * db + jb) * k(ja, ia);
  return out;
}

// +1/-1 observable maximizing Tr(S m): the sign of m's spectrum, zero mapped to +1.
Matrix best_response(const Matrix& m) {
  auto eig = hermitian_eigen(m);
  Eigen::VectorXd s = eig.eigenvalues().unaryExpr([](double v) { return v >= -1e-14 ? 1.0 : -1.0; });
  Matrix v = eig.eigenvectors();
  Matrix out = v * s.cast<std::complex<double>>().asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

struct SeesawRun {
  double value = -std::numeric_limits<double>::infinity();
  std::array<Matrix, 2> a, b;
  Vector psi;
  int iterations = 0;
  bool converged = false;
  bool stationary = false;
  std::vector<double> trace;
};

Matrix chsh_matrix(const std::array<Matrix, 2>& a, const std::array<Matrix, 2>& b) {
  return kron(a[0], b[0]) + kron(a[0], b[1]) + kron(a[1], b[0]) - kron(a[1], b[1]);
}

double pure_value(const Vector& psi, const Matrix& c) { return psi.dot(c * psi).real(); }

void top_eigenvector(const Matrix& c, Vector& psi, double& value) {
  auto eig = hermitian_eigen(c);
  const Eigen::Index last = eig.eigenvalues().size() - 1;
  psi = eig.eigenvectors().col(last);
  value = eig.eigenvalues()(last);
}

SeesawRun seesaw_run(const SeesawOptions& opt, int restart) {
  const Eigen::Index d = opt.dim;
  SeesawRun run;
  Rng rng = substream(opt.seed, static_cast<std::uint64_t>(restart));
  for (int k = 0; k < 2; ++k) {
    if (opt.identity_start) {
      run.a[k] = Matrix::Identity(d, d);
      run.b[k] = Matrix::Identity(d, d);
    } else {
      run.a[k] = random_involution(d, rng).matrix();
      run.b[k] = random_involution(d, rng).matrix();
    }
  }
  double value = 0.0;
  top_eigenvector(chsh_matrix(run.a, run.b), run.psi, value);
  run.trace.push_back(value);

  // A step may lose up to rounding; anything beyond that is a bug.
  auto record = [&run](double v) {
    if (v < run.trace.back() - 1e-9) throw Error("seesaw objective decreased");
    run.trace.push_back(v);
  };

  for (int it = 1; it <= opt.max_iters; ++it) {
    run.iterations = it;
    const double before = value;
    Matrix rho = run.psi * run.psi.adjoint();

    std::array<Matrix, 2> ka{run.b[0] + run.b[1], run.b[0] - run.b[1]};
    for (int x = 0; x < 2; ++x) run.a[x] = best_response(reduce_to_alice(rho, ka[x], d, d));
    record(pure_value(run.psi, chsh_matrix(run.a, run.b)));

    std::array<Matrix, 2> kb{run.a[0] + run.a[1], run.a[0] - run.a[1]};
    for (int y = 0; y < 2; ++y) run.b[y] = best_response(reduce_to_bob(rho, kb[y], d, d));
    record(pure_value(run.psi, chsh_matrix(run.a, run.b)));

    top_eigenvector(chsh_matrix(run.a, run.b), run.psi, value);
    record(value);

    if (value - before < opt.improvement_tol) {
      run.converged = true;
      run.stationary = (it == 1) && std::abs(value - before) < opt.improvement_tol;
      break;
    }
  }
  run.value = value;
  return run;
}

}  // namespace

std::vector<std::pair<ClassicalStrategy, double>> classical_values() {
  std::vector<std::pair<ClassicalStrategy, double>> out;
  for (int bits = 0; bits < 16; ++bits) {
    ClassicalStrategy s{{(bits >> 3) & 1, (bits >> 2) & 1}, {(bits >> 1) & 1, bits & 1}};
    out.emplace_back(s, chsh(deterministic_box(s.fa, s.fb), Valuation::Signed));
  }
  return out;
}

OptimizationReport classical_max() {
  auto values = classical_values();
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (std::abs(values[i].second) > std::abs(values[best].second)) best = i;
  OptimizationReport report;
  report.value = std::abs(values[best].second);
  report.witness = values[best].first;
  report.iterations = static_cast<int>(values.size());
  report.converged = true;
  return report;
}

OptimizationReport seesaw_quantum_max(const SeesawOptions& options) {
  if (options.dim < 2 || options.dim > kMaxLocalDim) throw InvalidInput("seesaw: dim must be in [2, 8]");
  if (options.restarts < 1) throw InvalidInput("seesaw: restarts must be >= 1");
  if (options.max_iters < 1) throw InvalidInput("seesaw: max_iters must be >= 1");

  std::vector<SeesawRun> runs(static_cast<std::size_t>(options.restarts));
  std::vector<std::string> errors(runs.size());
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < options.restarts; ++r) {
    try {
      runs[static_cast<std::size_t>(r)] = seesaw_run(options, r);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(r)] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error("seesaw: " + e);

  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].value > runs[best].value) best = i;
  SeesawRun& run = runs[best];
  if (run.value > kTsirelsonBound + 1e-9) throw BoundViolation("seesaw value exceeds 2 sqrt(2)");

  bool any_converged = false;
  for (const auto& r : runs) any_converged = any_converged || r.converged;

  OptimizationReport report;
  report.value = run.value;
  report.iterations = run.iterations;
  report.converged = run.converged;
  report.stationary = run.stationary;
  report.trace = run.trace;
  if (!any_converged) report.warning = "ConvergenceWarning: no restart met the improvement tolerance";
  report.witness = QuantumWitness{
      {Observable(run.a[0], ObservableLabel{Party::Alice, 0}), Observable(run.a[1], ObservableLabel{Party::Alice, 1})},
      {Observable(run.b[0], ObservableLabel{Party::Bob, 0}), Observable(run.b[1], ObservableLabel{Party::Bob, 1})},
      QuantumState::pure(run.psi.normalized())};
  return report;
}

OptimizationReport nonsignaling_max(BellFunctional functional, std::optional<int> chsh_cut) {
  LinearProgram lp;
  const auto signs = functional_signs(functional);
  const auto chsh_signs = functional_signs(BellFunctional::Chsh);
  lp.objective.assign(16, Rational(0));
  std::vector<Rational> chsh_row(16, Rational(0));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const int parity = (a ^ b) ? -1 : 1;
          lp.objective[table_index(x, y, a, b)] = signs[x][y] * parity;
          chsh_row[table_index(x, y, a, b)] = chsh_signs[x][y] * parity;
        }
  auto add_eq = [&lp](std::vector<Rational> row, int rhs) {
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.emplace_back(rhs);
  };
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      std::vector<Rational> row(16, Rational(0));
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) row[table_index(x, y, a, b)] = 1;
      add_eq(row, 1);
    }
  // Alice's marginal independent of y, Bob's independent of x.
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) {
      std::vector<Rational> row(16, Rational(0));
      for (int b = 0; b < 2; ++b) {
        row[table_index(x, 0, a, b)] += 1;
        row[table_index(x, 1, a, b)] -= 1;
      }
      add_eq(row, 0);
    }
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b) {
      std::vector<Rational> row(16, Rational(0));
      for (int a = 0; a < 2; ++a) {
        row[table_index(0, y, a, b)] += 1;
        row[table_index(1, y, a, b)] -= 1;
      }
      add_eq(row, 0);
    }
  if (chsh_cut) {
    std::vector<Rational> neg(16);
    for (std::size_t i = 0; i < 16; ++i) neg[i] = -chsh_row[i];
    lp.ub_lhs.push_back(chsh_row);
    lp.ub_rhs.emplace_back(*chsh_cut);
    lp.ub_lhs.push_back(neg);
    lp.ub_rhs.emplace_back(*chsh_cut);
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw Error("non-signaling LP did not reach an optimum");
  BipartiteBox::Table p{};
  for (std::size_t i = 0; i < 16; ++i) p[i] = static_cast<double>(sol.x[i]);
  OptimizationReport report;
  report.value = static_cast<double>(sol.value);
  report.witness = new_box(p);
  report.iterations = sol.pivots;
  report.converged = true;
  return report;
}

double evaluate_witness(const OptimizationWitness& witness, BellFunctional functional) {
  if (const auto* s = std::get_if<ClassicalStrategy>(&witness))
    return box_functional(deterministic_box(s->fa, s->fb), functional);
  if (const auto* box = std::get_if<BipartiteBox>(&witness)) return box_functional(*box, functional);
  const auto& q = std::get<QuantumWitness>(witness);
  if (functional != BellFunctional::Chsh) throw InvalidInput("quantum witnesses are evaluated on CHSH only");
  return expectation(q.state, chsh_operator(q.alice[0], q.alice[1], q.bob[0], q.bob[1]).op);
}

}  // namespace boxlab
