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

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <variant>

#include "boxlab/box.hpp"
#include "boxlab/rng.hpp"

namespace boxlab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;
inline constexpr int kMaxLocalDim = 8;

struct ObservableLabel {
  Party party;
  int input;
};

/// Hermitian operator standing for one party's measurement (or a joint product).
class Observable {
 public:
  /// Throws NonHermitian if m differs from its adjoint by more than 1e-12.
  explicit Observable(Matrix m, std::optional<ObservableLabel> label = std::nullopt);

  static Observable identity(Eigen::Index dim);
  static Observable zero(Eigen::Index dim);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  const std::optional<ObservableLabel>& label() const { return label_; }

  Eigen::VectorXd eigenvalues() const;
  bool spectrum_bounded(double tol = kEigenTol) const;
  bool is_involution(double tol = kEigenTol) const;

  /// 0/1-valued observable M to its +1/-1 form I - 2M.
  Observable to_signed() const;
  /// Inverse map: S to (I - S) / 2.
  Observable to_zero_one() const;

 private:
  Matrix m_;
  std::optional<ObservableLabel> label_;
};

/// Pure state vector or density matrix on the joint space.
class QuantumState {
 public:
  /// Throws InvalidInput unless the norm is 1 within 1e-12.
  static QuantumState pure(Vector psi);
  /// Throws InvalidInput unless Hermitian, unit trace and min eigenvalue >= -1e-10.
  static QuantumState mixed(Matrix rho);

  Eigen::Index dim() const;
  bool is_pure() const { return std::holds_alternative<Vector>(data_); }
  const Vector& vector() const { return std::get<Vector>(data_); }
  Matrix density() const;

 private:
  explicit QuantumState(std::variant<Vector, Matrix> data) : data_(std::move(data)) {}
  std::variant<Vector, Matrix> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Observable tensor(const Observable& a, const Observable& b);

/// AB - BA. Throws DimensionMismatch.
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix commutator(const Observable& a, const Observable& b);

/// Real part of <psi|M|psi> or Tr(rho M). Throws NonHermitian if the imaginary
/// part exceeds 1e-10, DimensionMismatch on incompatible sizes.
double expectation(const QuantumState& state, const Matrix& m);
double expectation(const QuantumState& state, const Observable& m);

struct ChshOperator {
  Observable op;
  std::array<Observable, 4> parts;  // A0, A1, B0, B1
};

/// A0 B0 + A0 B1 + A1 B0 - A1 B1 with A on the left tensor factor.
ChshOperator chsh_operator(const Observable& a0, const Observable& a1, const Observable& b0,
                           const Observable& b1);

struct LandauResult {
  double identity_residual;         // ||4I + [A0,A1]x[B1,B0] - C^2||
  double psd_margin;                // min eigenvalue of the same operator
  double mirror_identity_residual;  // input-swapped combination (A0 <-> A1)
  double mirror_psd_margin;
};

/// Landau's operator form of the Tsirelson bound. Throws SpectrumError if an
/// eigenvalue of an input exceeds 1 + tol in magnitude.
LandauResult landau_check(const Observable& a0, const Observable& a1, const Observable& b0,
                          const Observable& b1, double tol = kEigenTol);

inline constexpr double kTsirelsonBound = 2.8284271247461903;  // 2 sqrt(2)

/// |<C>| for the given state. Throws BoundViolation above 2 sqrt(2) + 1e-9,
/// SpectrumError for inputs with spectrum outside [-1, 1].
double tsirelson_check(const Observable& a0, const Observable& a1, const Observable& b0,
                       const Observable& b1, const QuantumState& state);

/// Two-outcome projective measurement: projectors[k] for output k.
struct ProjectiveMeasurement {
  std::array<Matrix, 2> projectors;
};

/// {I - M, M} for an observable with eigenvalues 0 and 1.
ProjectiveMeasurement measurement_from_zero_one(const Observable& m);
/// {(I + S)/2, (I - S)/2} for a +1/-1 observable; output 0 is the +1 eigenspace.
ProjectiveMeasurement measurement_from_signed(const Observable& s);

/// Born-rule table p(a,b|x,y) = <P^A_{x,a} (x) P^B_{y,b}>. Throws ProjectorError
/// when P^2 != P or P0 + P1 != I within 1e-10.
BipartiteBox box_from_quantum(const QuantumState& state, const std::array<ProjectiveMeasurement, 2>& alice,
                              const std::array<ProjectiveMeasurement, 2>& bob);

/// Eigendecomposition of (M + M^dagger)/2.
Eigen::SelfAdjointEigenSolver<Matrix> hermitian_eigen(const Matrix& m);

/// Optimal qubit CHSH configuration: A0 = Z, A1 = X, B = (Z +- X)/sqrt2,
/// state (|00> + |11>)/sqrt2. Observables are in +1/-1 form.
struct QuantumSetup {
  std::array<Observable, 2> alice;
  std::array<Observable, 2> bob;
  QuantumState state;
};
QuantumSetup optimal_qubit_setup();

// Seeded random ensembles.
Matrix random_unitary(Eigen::Index dim, Rng& rng);
Observable random_involution(Eigen::Index dim, Rng& rng);
/// Random eigenbasis, eigenvalues uniform in [-1, 1].
Observable random_bounded_observable(Eigen::Index dim, Rng& rng);
QuantumState random_pure_state(Eigen::Index dim, Rng& rng);
QuantumState random_mixed_state(Eigen::Index dim, Rng& rng);

}  // namespace boxlab
