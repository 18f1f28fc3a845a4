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

#include "boxlab/operators.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "boxlab/error.hpp"

namespace boxlab {

namespace {

using cd = std::complex<double>;

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix gaussian_matrix(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      double re = normal(rng);
      double im = normal(rng);
      g(i, j) = cd(re, im);
    }
  return g;
}

void require_bounded(const Observable& o, double tol, const char* name) {
  Eigen::VectorXd ev = o.eigenvalues();
  double worst = ev.cwiseAbs().maxCoeff();
  if (worst > 1.0 + tol) {
    std::ostringstream msg;
    msg << name << " has an eigenvalue of magnitude " << worst << " > 1";
    throw SpectrumError(msg.str());
  }
}

void require_parties(const Observable& a0, const Observable& a1, const Observable& b0, const Observable& b1) {
  if (a0.dim() != a1.dim()) throw DimensionMismatch("Alice observables differ in dimension");
  if (b0.dim() != b1.dim()) throw DimensionMismatch("Bob observables differ in dimension");
}

void check_projector(const Matrix& p, Eigen::Index dim, const char* who) {
  if (p.rows() != dim || p.cols() != dim) throw ProjectorError(std::string(who) + ": projector has wrong dimension");
  if (max_abs(p - p.adjoint()) > kEigenTol) throw ProjectorError(std::string(who) + ": projector is not Hermitian");
  if (max_abs(p * p - p) > kEigenTol) throw ProjectorError(std::string(who) + ": projector is not idempotent");
}

}  // namespace

Observable::Observable(Matrix m, std::optional<ObservableLabel> label) : m_(std::move(m)), label_(label) {
  if (m_.rows() != m_.cols()) throw DimensionMismatch("observable matrix must be square");
  if (max_abs(m_ - m_.adjoint()) > kHermitianTol) throw NonHermitian("observable matrix is not Hermitian");
}

Observable Observable::identity(Eigen::Index dim) { return Observable(Matrix::Identity(dim, dim)); }
Observable Observable::zero(Eigen::Index dim) { return Observable(Matrix::Zero(dim, dim)); }

Eigen::VectorXd Observable::eigenvalues() const { return hermitian_eigen(m_).eigenvalues(); }

bool Observable::spectrum_bounded(double tol) const {
  return eigenvalues().cwiseAbs().maxCoeff() <= 1.0 + tol;
}

bool Observable::is_involution(double tol) const {
  return max_abs(m_ * m_ - Matrix::Identity(dim(), dim())) <= tol;
}

Observable Observable::to_signed() const {
  return Observable(Matrix::Identity(dim(), dim()) - 2.0 * m_, label_);
}

Observable Observable::to_zero_one() const {
  return Observable(0.5 * (Matrix::Identity(dim(), dim()) - m_), label_);
}

QuantumState QuantumState::pure(Vector psi) {
  if (psi.size() == 0) throw InvalidInput("state vector is empty");
  if (std::abs(psi.norm() - 1.0) > 1e-12) throw InvalidInput("state vector is not normalized");
  return QuantumState(std::move(psi));
}

QuantumState QuantumState::mixed(Matrix rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw InvalidInput("density matrix must be square");
  if (max_abs(rho - rho.adjoint()) > kHermitianTol) throw InvalidInput("density matrix is not Hermitian");
  if (std::abs(rho.trace() - cd(1.0, 0.0)) > 1e-12) throw InvalidInput("density matrix trace is not 1");
  if (hermitian_eigen(rho).eigenvalues().minCoeff() < -kEigenTol)
    throw InvalidInput("density matrix is not positive semidefinite");
  return QuantumState(std::move(rho));
}

Eigen::Index QuantumState::dim() const {
  return is_pure() ? vector().size() : std::get<Matrix>(data_).rows();
}

Matrix QuantumState::density() const {
  if (is_pure()) return vector() * vector().adjoint();
  return std::get<Matrix>(data_);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Observable tensor(const Observable& a, const Observable& b) { return Observable(kron(a.matrix(), b.matrix())); }

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("commutator of differently sized matrices");
  return a * b - b * a;
}

Matrix commutator(const Observable& a, const Observable& b) { return commutator(a.matrix(), b.matrix()); }

double expectation(const QuantumState& state, const Matrix& m) {
  if (m.rows() != state.dim() || m.cols() != state.dim())
    throw DimensionMismatch("operator and state dimensions differ");
  cd value;
  if (state.is_pure()) {
    value = state.vector().dot(m * state.vector());
  } else {
    value = (state.density() * m).trace();
  }
  if (std::abs(value.imag()) > kEigenTol) throw NonHermitian("expectation value has a nonzero imaginary part");
  return value.real();
}

double expectation(const QuantumState& state, const Observable& m) { return expectation(state, m.matrix()); }

ChshOperator chsh_operator(const Observable& a0, const Observable& a1, const Observable& b0, const Observable& b1) {
  require_parties(a0, a1, b0, b1);
  Matrix c = kron(a0.matrix(), b0.matrix()) + kron(a0.matrix(), b1.matrix()) + kron(a1.matrix(), b0.matrix()) -
             kron(a1.matrix(), b1.matrix());
  // Products of Hermitian factors on separate tensor slots are Hermitian up to rounding.
  c = 0.5 * (c + c.adjoint()).eval();
  return {Observable(std::move(c)), {a0, a1, b0, b1}};
}

namespace {

std::pair<double, double> landau_residual(const Observable& a0, const Observable& a1, const Observable& b0,
                                          const Observable& b1) {
  Matrix c = chsh_operator(a0, a1, b0, b1).op.matrix();
  const Eigen::Index n = c.rows();
  Matrix delta = 4.0 * Matrix::Identity(n, n) + kron(commutator(a0, a1), commutator(b1, b0)) - c * c;
  Eigen::VectorXd ev = hermitian_eigen(delta).eigenvalues();
  return {ev.cwiseAbs().maxCoeff(), ev.minCoeff()};
}

}  // namespace

LandauResult landau_check(const Observable& a0, const Observable& a1, const Observable& b0, const Observable& b1,
                          double tol) {
  require_parties(a0, a1, b0, b1);
  require_bounded(a0, tol, "A0");
  require_bounded(a1, tol, "A1");
  require_bounded(b0, tol, "B0");
  require_bounded(b1, tol, "B1");
  auto [residual, margin] = landau_residual(a0, a1, b0, b1);
  auto [mirror_residual, mirror_margin] = landau_residual(a1, a0, b0, b1);
  return {residual, margin, mirror_residual, mirror_margin};
}

double tsirelson_check(const Observable& a0, const Observable& a1, const Observable& b0, const Observable& b1,
                       const QuantumState& state) {
  require_parties(a0, a1, b0, b1);
  require_bounded(a0, kEigenTol, "A0");
  require_bounded(a1, kEigenTol, "A1");
  require_bounded(b0, kEigenTol, "B0");
  require_bounded(b1, kEigenTol, "B1");
  double value = std::abs(expectation(state, chsh_operator(a0, a1, b0, b1).op));
  if (value > kTsirelsonBound + 1e-9) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "|<C>| = " << value << " exceeds 2 sqrt(2)";
    throw BoundViolation(msg.str());
  }
  return value;
}

ProjectiveMeasurement measurement_from_zero_one(const Observable& m) {
  return {{Matrix::Identity(m.dim(), m.dim()) - m.matrix(), m.matrix()}};
}

ProjectiveMeasurement measurement_from_signed(const Observable& s) {
  Matrix id = Matrix::Identity(s.dim(), s.dim());
  return {{0.5 * (id + s.matrix()), 0.5 * (id - s.matrix())}};
}

BipartiteBox box_from_quantum(const QuantumState& state, const std::array<ProjectiveMeasurement, 2>& alice,
                              const std::array<ProjectiveMeasurement, 2>& bob) {
  const Eigen::Index da = alice[0].projectors[0].rows();
  const Eigen::Index db = bob[0].projectors[0].rows();
  if (da * db != state.dim()) throw DimensionMismatch("measurement dimensions do not match the state");
  for (const auto* side : {&alice, &bob}) {
    const Eigen::Index d = side == &alice ? da : db;
    const char* who = side == &alice ? "Alice" : "Bob";
    for (const auto& m : *side) {
      check_projector(m.projectors[0], d, who);
      check_projector(m.projectors[1], d, who);
      if (max_abs(m.projectors[0] + m.projectors[1] - Matrix::Identity(d, d)) > kEigenTol)
        throw ProjectorError(std::string(who) + ": projectors do not sum to the identity");
    }
  }
  BipartiteBox::Table p{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double slice = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          double v = expectation(state, kron(alice[x].projectors[a], bob[y].projectors[b]));
          p[table_index(x, y, a, b)] = std::max(v, 0.0);
          slice += p[table_index(x, y, a, b)];
        }
      // Absorb rounding so the slice is normalized to table precision.
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) p[table_index(x, y, a, b)] /= slice;
    }
  }
  return new_box(p);
}

Eigen::SelfAdjointEigenSolver<Matrix> hermitian_eigen(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  return Eigen::SelfAdjointEigenSolver<Matrix>(h);
}

QuantumSetup optimal_qubit_setup() {
  Matrix z(2, 2), x(2, 2);
  z << 1, 0, 0, -1;
  x << 0, 1, 1, 0;
  const double r = 1.0 / std::sqrt(2.0);
  Vector psi = Vector::Zero(4);
  psi(0) = r;
  psi(3) = r;
  return {{Observable(z, ObservableLabel{Party::Alice, 0}), Observable(x, ObservableLabel{Party::Alice, 1})},
          {Observable(r * (z + x), ObservableLabel{Party::Bob, 0}),
           Observable(r * (z - x), ObservableLabel{Party::Bob, 1})},
          QuantumState::pure(psi)};
}

Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(dim, rng));
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (Eigen::Index j = 0; j < dim; ++j) {
    cd d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Observable random_involution(Eigen::Index dim, Rng& rng) {
  Matrix g = gaussian_matrix(dim, rng);
  auto eig = hermitian_eigen(g);
  Eigen::VectorXd signs = eig.eigenvalues().unaryExpr([](double v) { return v >= 0.0 ? 1.0 : -1.0; });
  Matrix v = eig.eigenvectors();
  Matrix m = v * signs.cast<cd>().asDiagonal() * v.adjoint();
  return Observable(0.5 * (m + m.adjoint()));
}

Observable random_bounded_observable(Eigen::Index dim, Rng& rng) {
  Matrix u = random_unitary(dim, rng);
  Eigen::VectorXd ev(dim);
  for (Eigen::Index i = 0; i < dim; ++i) ev(i) = 2.0 * uniform01(rng) - 1.0;
  Matrix m = u * ev.cast<cd>().asDiagonal() * u.adjoint();
  return Observable(0.5 * (m + m.adjoint()));
}

QuantumState random_pure_state(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double re = normal(rng);
    double im = normal(rng);
    psi(i) = cd(re, im);
  }
  psi.normalize();
  return QuantumState::pure(std::move(psi));
}

QuantumState random_mixed_state(Eigen::Index dim, Rng& rng) {
  Matrix g = gaussian_matrix(dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return QuantumState::mixed(std::move(rho));
}

}  // namespace boxlab
