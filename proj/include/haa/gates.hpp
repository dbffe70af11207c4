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

#ifndef HAA_GATES_HPP
#define HAA_GATES_HPP

#include <span>

#include "haa/circuit.hpp"
#include "haa/types.hpp"

namespace haa {

// Dense gate matrices. Two-qubit matrices use the gate-local little-endian
// basis: index = b0 + 2·b1 where b0 is the bit of the first target.

Matrix2c rx_matrix(Real theta);
Matrix2c ry_matrix(Real theta);
Matrix2c rz_matrix(Real theta);
Matrix2c hadamard_matrix();
/// RZ(φ)·RY(θ)·RZ(λ).
Matrix2c u3_matrix(Real theta, Real phi, Real lambda);

Matrix4c cnot_matrix();
Matrix4c cz_matrix();

/// exp(−(i/2)(tx·X⊗X + ty·Y⊗Y + tz·Z⊗Z)), by diagonalizing the generator.
Matrix4c can_unitary(Real tx, Real ty, Real tz);

/// 2^w × 2^w matrix of exp(−iθP/2) over the string's own support, ordered
/// as its factors.
MatrixXc pauli_rotation_matrix(const PauliString& p, Real theta);

/// Local matrix of a unitary gate with resolved angles; not defined for
/// MEASURE_RESET.
MatrixXc gate_matrix(const Gate& gate, std::span<const Real> params);

}  // namespace haa

#endif  // HAA_GATES_HPP
