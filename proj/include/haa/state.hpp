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

#ifndef HAA_STATE_HPP
#define HAA_STATE_HPP

#include <span>
#include <vector>

#include "haa/types.hpp"

namespace haa {

/// 2^n amplitudes, qubit 0 is the least significant bit of the index.
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);
  /// Throws std::invalid_argument when the size is not 2^n_qubits.
  StateVector(std::size_t n_qubits, VectorXc amplitudes);

  static StateVector basis(std::size_t n_qubits, BasisIndex index);
  static StateVector occupied(std::size_t n_qubits,
                              std::span<const std::size_t> ones);

  std::size_t n_qubits() const { return n_qubits_; }
  BasisIndex dim() const { return dimension_of(n_qubits_); }
  const VectorXc& amplitudes() const { return amps_; }
  VectorXc& amplitudes() { return amps_; }
  Complex* data() { return amps_.data(); }
  const Complex* data() const { return amps_.data(); }
  Complex operator[](BasisIndex i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  Real norm() const { return amps_.norm(); }

 private:
  std::size_t n_qubits_;
  VectorXc amps_;
};

class DensityMatrix {
 public:
  /// |0…0⟩⟨0…0|.
  explicit DensityMatrix(std::size_t n_qubits);
  DensityMatrix(std::size_t n_qubits, MatrixXc entries);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  BasisIndex dim() const { return dimension_of(n_qubits_); }
  const MatrixXc& matrix() const { return rho_; }
  MatrixXc& matrix() { return rho_; }

  Real trace() const { return rho_.trace().real(); }
  Real hermiticity_error() const;
  Real min_eigenvalue() const;
  /// Hermitian, unit trace and PSD, each within `tol`.
  bool is_valid(Real tol = 1e-10) const;

 private:
  std::size_t n_qubits_;
  MatrixXc rho_;
};

}  // namespace haa

#endif  // HAA_STATE_HPP
