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
#include <complex>

#include "boxlab/error.hpp"
#include "boxlab/operators.hpp"

using namespace boxlab;
using cd = std::complex<double>;

namespace {

Matrix m2(cd a, cd b, cd c, cd d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

const Matrix kZ = m2(1, 0, 0, -1);
const Matrix kX = m2(0, 1, 1, 0);
const Matrix kP1 = m2(0, 0, 0, 1);  // diag(0, 1)

QuantumState ket(std::initializer_list<cd> v) {
  Vector psi(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (cd c : v) psi(i++) = c;
  return QuantumState::pure(psi);
}

Observable conj(const Matrix& u, const Observable& o) { return Observable(u * o.matrix() * u.adjoint()); }

}  // namespace

TEST_CASE("Observable validation") {
  CHECK_THROWS_AS(Observable(m2(0, 1, 0, 0)), NonHermitian);
  CHECK_NOTHROW(Observable(m2(0, cd(0, -1), cd(0, 1), 0)));
  Observable m(kP1);
  CHECK(m.to_signed().matrix().isApprox(kZ));
  CHECK(m.to_signed().to_zero_one().matrix().isApprox(kP1));
  CHECK(Observable(kZ).is_involution());
  CHECK_FALSE(m.is_involution());
  CHECK(m.spectrum_bounded());
  CHECK_FALSE(Observable(2.0 * kZ).spectrum_bounded());
}

TEST_CASE("QuantumState validation") {
  CHECK_THROWS_AS(ket({1, 1}), InvalidInput);
  Matrix rho = Matrix::Identity(2, 2) * 0.5;
  CHECK_NOTHROW(QuantumState::mixed(rho));
  CHECK_THROWS_AS(QuantumState::mixed(Matrix::Identity(2, 2)), InvalidInput);
  CHECK_THROWS_AS(QuantumState::mixed(m2(1.5, 0, 0, -0.5)), InvalidInput);
}

TEST_CASE("tensor") {
  const Observable i2 = Observable::identity(2);
  CHECK(tensor(i2, i2).matrix().isApprox(Matrix::Identity(4, 4)));
  Matrix expected = Matrix::Zero(4, 4);
  expected(2, 2) = expected(3, 3) = 1;
  CHECK(tensor(Observable(kP1), i2).matrix().isApprox(expected));

  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Observable a = random_bounded_observable(3, rng), b = random_bounded_observable(2, rng);
    Matrix lhs = tensor(a, Observable::identity(2)).matrix() * tensor(Observable::identity(3), b).matrix();
    CHECK((lhs - tensor(a, b).matrix()).norm() < 1e-12);
  }
}

TEST_CASE("commutator") {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    Observable a = random_bounded_observable(2, rng), b = random_bounded_observable(2, rng);
    const Observable i2 = Observable::identity(2);
    CHECK(commutator(tensor(a, i2), tensor(i2, b)).norm() < 1e-12);
    CHECK(commutator(a, a).norm() < 1e-12);
  }
  // [Z, X] = 2iY, Frobenius norm 2 sqrt 2.
  CHECK(commutator(kZ, kX).norm() == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK_THROWS_AS(commutator(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("expectation") {
  CHECK(expectation(ket({1, 0}), Observable(kP1)) == 0.0);
  CHECK(expectation(QuantumState::mixed(Matrix::Identity(2, 2) * 0.5), Observable(kP1)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(expectation(ket({1, 0}), Observable::identity(4)), DimensionMismatch);
  // A non-Hermitian matrix with an imaginary expectation.
  const double r = 1 / std::sqrt(2.0);
  CHECK_THROWS_AS(expectation(ket({r, cd(0, r)}), m2(0, 1, -1, 0)), NonHermitian);
}

TEST_CASE("chsh_operator") {
  const Observable i2 = Observable::identity(2), z2 = Observable::zero(2);
  CHECK(chsh_operator(i2, i2, i2, i2).op.matrix().isApprox(2.0 * Matrix::Identity(4, 4)));
  CHECK(chsh_operator(z2, z2, z2, z2).op.matrix().norm() == 0.0);
  QuantumSetup s = optimal_qubit_setup();
  ChshOperator c = chsh_operator(s.alice[0], s.alice[1], s.bob[0], s.bob[1]);
  CHECK(c.op.eigenvalues().maxCoeff() == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(chsh_operator(i2, Observable::identity(3), i2, i2), DimensionMismatch);
}

TEST_CASE("landau_check") {
  const Observable i2 = Observable::identity(2);
  LandauResult trivial = landau_check(i2, i2, i2, i2);
  CHECK(trivial.identity_residual == 0.0);

  // Convention check on an explicit qubit example: with the optimal observables
  // C^2 = 4I + [Z,X] (x) [(Z-X)/sqrt2, (Z+X)/sqrt2], computed here by hand.
  QuantumSetup s = optimal_qubit_setup();
  const Matrix c = chsh_operator(s.alice[0], s.alice[1], s.bob[0], s.bob[1]).op.matrix();
  const Matrix zx = kZ * kX - kX * kZ;
  const Matrix b1b0 = s.bob[1].matrix() * s.bob[0].matrix() - s.bob[0].matrix() * s.bob[1].matrix();
  CHECK((c * c - 4.0 * Matrix::Identity(4, 4) - kron(zx, b1b0)).norm() < 1e-12);
  // The opposite order would leave a residual of spectral norm 8 on this example.
  const Matrix wrong = 4.0 * Matrix::Identity(4, 4) + kron(zx, Matrix(-b1b0)) - c * c;
  CHECK(hermitian_eigen(wrong).eigenvalues().cwiseAbs().maxCoeff() == doctest::Approx(8.0));

  LandauResult opt = landau_check(s.alice[0], s.alice[1], s.bob[0], s.bob[1]);
  CHECK(opt.identity_residual <= 1e-10);
  CHECK(opt.mirror_identity_residual <= 1e-10);

  CHECK_THROWS_AS(landau_check(Observable(2.0 * kZ), i2, i2, i2), SpectrumError);
}

TEST_CASE("tsirelson_check") {
  QuantumSetup s = optimal_qubit_setup();
  CHECK(tsirelson_check(s.alice[0], s.alice[1], s.bob[0], s.bob[1], s.state) ==
        doctest::Approx(kTsirelsonBound).epsilon(1e-9));
  const Observable i2 = Observable::identity(2);
  CHECK(tsirelson_check(i2, i2, i2, i2, s.state) == doctest::Approx(2.0));
  CHECK_THROWS_AS(tsirelson_check(Observable(1.5 * kZ), i2, i2, i2, s.state), SpectrumError);
}

TEST_CASE("box_from_quantum") {
  const Observable z(kZ), x(kX);
  const std::array<ProjectiveMeasurement, 2> comp{measurement_from_signed(z), measurement_from_signed(z)};
  BipartiteBox d = box_from_quantum(ket({1, 0, 0, 0}), comp, comp);
  CHECK(d == deterministic_box({0, 0}, {0, 0}));

  const std::array<ProjectiveMeasurement, 2> zx{measurement_from_signed(z), measurement_from_signed(x)};
  BipartiteBox u = box_from_quantum(QuantumState::mixed(Matrix::Identity(4, 4) * 0.25), zx, zx);
  for (double p : u.table()) CHECK(p == doctest::Approx(0.25).epsilon(1e-12));

  QuantumSetup s = optimal_qubit_setup();
  BipartiteBox q = box_from_quantum(s.state, {measurement_from_signed(s.alice[0]), measurement_from_signed(s.alice[1])},
                                    {measurement_from_signed(s.bob[0]), measurement_from_signed(s.bob[1])});
  CHECK(chsh(q) == doctest::Approx(kTsirelsonBound).epsilon(1e-9));
  CHECK(is_nonsignaling(q).nonsignaling);

  ProjectiveMeasurement bad{{kP1, kP1}};
  CHECK_THROWS_AS(box_from_quantum(s.state, {bad, bad}, comp), ProjectorError);
  ProjectiveMeasurement not_projector{{0.5 * Matrix::Identity(2, 2), 0.5 * Matrix::Identity(2, 2)}};
  CHECK_THROWS_AS(box_from_quantum(s.state, comp, {not_projector, not_projector}), ProjectorError);

  // 0/1 form gives the same measurement as its signed image.
  ProjectiveMeasurement m01 = measurement_from_zero_one(Observable(kP1));
  CHECK(m01.projectors[1].isApprox(kP1));
}

TEST_CASE("property: Born boxes are NS and match the operator expectation") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 2;
    std::array<Observable, 4> o{random_involution(d, rng), random_involution(d, rng), random_involution(d, rng),
                                random_involution(d, rng)};
    QuantumState st = trial % 3 == 0 ? random_mixed_state(d * d, rng) : random_pure_state(d * d, rng);
    BipartiteBox b = box_from_quantum(st, {measurement_from_signed(o[0]), measurement_from_signed(o[1])},
                                      {measurement_from_signed(o[2]), measurement_from_signed(o[3])});
    CHECK(is_nonsignaling(b).nonsignaling);
    const double op_value = expectation(st, chsh_operator(o[0], o[1], o[2], o[3]).op);
    CHECK(std::abs(chsh(b) - op_value) <= 1e-9);
    CHECK(tsirelson_check(o[0], o[1], o[2], o[3], st) <= kTsirelsonBound + 1e-9);
  }
}

TEST_CASE("property: unitary conjugation invariance") {
  Rng rng(78);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Observable, 4> o{random_bounded_observable(2, rng), random_bounded_observable(2, rng),
                                random_bounded_observable(2, rng), random_bounded_observable(2, rng)};
    QuantumState st = random_pure_state(4, rng);
    const Matrix ua = random_unitary(2, rng), ub = random_unitary(2, rng);
    const Matrix u = kron(ua, ub);
    QuantumState st2 = QuantumState::pure(u * st.vector());
    std::array<Observable, 4> o2{conj(ua, o[0]), conj(ua, o[1]), conj(ub, o[2]), conj(ub, o[3])};
    CHECK(std::abs(expectation(st, chsh_operator(o[0], o[1], o[2], o[3]).op) -
                   expectation(st2, chsh_operator(o2[0], o2[1], o2[2], o2[3]).op)) < 1e-9);
    LandauResult l1 = landau_check(o[0], o[1], o[2], o[3]), l2 = landau_check(o2[0], o2[1], o2[2], o2[3]);
    CHECK(std::abs(l1.psd_margin - l2.psd_margin) < 1e-9);
    CHECK(std::abs(l1.identity_residual - l2.identity_residual) < 1e-9);
  }
}
