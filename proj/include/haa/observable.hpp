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

#ifndef HAA_OBSERVABLE_HPP
#define HAA_OBSERVABLE_HPP

#include "haa/pauli.hpp"
#include "haa/state.hpp"
#include "haa/types.hpp"

namespace haa {

/**
 * A Hermitian Pauli operator compiled to a sparse matrix over its own
 * register of `n_qubits` qubits.
 *
 * States wider than the register are treated as H ⊗ I on the extra (high)
 * qubits, which is how observables act on system ⊗ ancilla states.
 */
class Observable {
 public:
  /// Throws std::domain_error for non-Hermitian operators and
  /// std::invalid_argument when the support exceeds `n_qubits`.
  Observable(const PauliOperator& op, std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  const SparseMatrixXc& matrix() const { return matrix_; }
  const PauliOperator& op() const { return op_; }

  /// True when the operator is a multiple of the identity.
  bool is_constant() const { return constant_; }

  /// (H ⊗ I)|ψ⟩ for a state of at least n_qubits() qubits.
  VectorXc apply(const StateVector& psi) const;

  Real expectation(const StateVector& psi) const;
  /// tr(Hρ); ρ may carry extra high qubits, which are traced out.
  Real expectation(const DensityMatrix& rho) const;

 private:
  PauliOperator op_;
  std::size_t n_qubits_;
  SparseMatrixXc matrix_;
  bool constant_ = false;
};

}  // namespace haa

#endif  // HAA_OBSERVABLE_HPP
