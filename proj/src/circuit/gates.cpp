// Copyright 2026 The haalab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "haa/gates.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace haa {

namespace {

const Complex kI(0.0, 1.0);

Matrix2c pauli_matrix(Axis a) {
  Matrix2c m;
  switch (a) {
    case Axis::X:
      m << 0, 1, 1, 0;
      break;
    case Axis::Y:
      m << 0, -kI, kI, 0;
      break;
    case Axis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace

Matrix2c rx_matrix(Real theta) {
  const Real c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix2c m;
  m << c, -kI * s, -kI * s, c;
  return m;
}

Matrix2c ry_matrix(Real theta) {
  const Real c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix2c m;
  m << c, -s, s, c;
  return m;
}

Matrix2c rz_matrix(Real theta) {
  Matrix2c m = Matrix2c::Zero();
  m(0, 0) = std::exp(-kI * (theta / 2));
  m(1, 1) = std::exp(kI * (theta / 2));
  return m;
}

Matrix2c hadamard_matrix() {
  const Real r = 1.0 / std::sqrt(2.0);
  Matrix2c m;
  m << r, r, r, -r;
  return m;
}

Matrix2c u3_matrix(Real theta, Real phi, Real lambda) {
  return rz_matrix(phi) * ry_matrix(theta) * rz_matrix(lambda);
}

Matrix4c cnot_matrix() {
  // control = local bit 0, target = local bit 1
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = 1;
  m(3, 1) = 1;
  m(2, 2) = 1;
  m(1, 3) = 1;
  return m;
}

Matrix4c cz_matrix() {
  Matrix4c m = Matrix4c::Identity();
  m(3, 3) = -1;
  return m;
}

Matrix4c can_unitary(Real tx, Real ty, Real tz) {
  const Matrix2c X = pauli_matrix(Axis::X), Y = pauli_matrix(Axis::Y),
                 Z = pauli_matrix(Axis::Z);
  Matrix4c g = tx * Matrix4c(Eigen::kroneckerProduct(X, X)) +
               ty * Matrix4c(Eigen::kroneckerProduct(Y, Y)) +
               tz * Matrix4c(Eigen::kroneckerProduct(Z, Z));
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(g);
  const auto& v = es.eigenvectors();
  Eigen::Matrix<Complex, 4, 1> phases;
  for (int i = 0; i < 4; ++i) phases(i) = std::exp(-kI * (es.eigenvalues()(i) / 2));
  return v * phases.asDiagonal() * v.adjoint();
}

MatrixXc pauli_rotation_matrix(const PauliString& p, Real theta) {
  MatrixXc pm = MatrixXc::Identity(1, 1);
  for (const auto& f : p.factors()) {
    // Later factors are more significant bits.
    pm = Eigen::kroneckerProduct(MatrixXc(pauli_matrix(f.second)), pm).eval();
  }
  const auto dim = pm.rows();
  return std::cos(theta / 2) * MatrixXc::Identity(dim, dim) -
         kI * std::sin(theta / 2) * pm;
}

MatrixXc gate_matrix(const Gate& gate, std::span<const Real> params) {
  auto a = [&](std::size_t i) { return gate.angles.at(i).value(params); };
  switch (gate.kind) {
    case GateKind::U3:
      return u3_matrix(a(0), a(1), a(2));
    case GateKind::RX:
      return rx_matrix(a(0));
    case GateKind::RY:
      return ry_matrix(a(0));
    case GateKind::RZ:
      return rz_matrix(a(0));
    case GateKind::H:
      return hadamard_matrix();
    case GateKind::CNOT:
      return cnot_matrix();
    case GateKind::CZ:
      return cz_matrix();
    case GateKind::CAN:
      return can_unitary(a(0), a(1), a(2));
    case GateKind::PauliRot:
      return pauli_rotation_matrix(gate.pauli, a(0));
    case GateKind::MeasureReset:
      break;
  }
  throw std::invalid_argument("gate_matrix: measure_reset has no unitary");
}

}  // namespace haa
