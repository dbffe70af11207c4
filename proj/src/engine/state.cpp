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

#include "haa/state.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace haa {

namespace {

void guard_width(std::size_t n_qubits) {
  if (n_qubits > 30) throw std::invalid_argument("state: more than 30 qubits");
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  guard_width(n_qubits);
  amps_ = VectorXc::Zero(static_cast<Eigen::Index>(dimension_of(n_qubits)));
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, VectorXc amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  guard_width(n_qubits);
  if (static_cast<BasisIndex>(amps_.size()) != dimension_of(n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count is not 2^n");
  }
}

StateVector StateVector::basis(std::size_t n_qubits, BasisIndex index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw std::out_of_range("StateVector::basis: index");
  s.amps_[0] = 0.0;
  s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::occupied(std::size_t n_qubits,
                                  std::span<const std::size_t> ones) {
  BasisIndex idx = 0;
  for (auto q : ones) {
    if (q >= n_qubits) throw std::out_of_range("StateVector::occupied: qubit");
    idx |= BasisIndex{1} << q;
  }
  return basis(n_qubits, idx);
}

DensityMatrix::DensityMatrix(std::size_t n_qubits) : n_qubits_(n_qubits) {
  guard_width(n_qubits);
  const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
  rho_ = MatrixXc::Zero(d, d);
  rho_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, MatrixXc entries)
    : n_qubits_(n_qubits), rho_(std::move(entries)) {
  guard_width(n_qubits);
  const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
  if (rho_.rows() != d || rho_.cols() != d) {
    throw std::invalid_argument("DensityMatrix: shape is not 2^n x 2^n");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.n_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
  const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
  return DensityMatrix(n_qubits, MatrixXc::Identity(d, d) / static_cast<Real>(d));
}

Real DensityMatrix::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

Real DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid(Real tol) const {
  return hermiticity_error() <= tol && std::abs(trace() - 1.0) <= tol &&
         min_eigenvalue() >= -tol;
}

}  // namespace haa
