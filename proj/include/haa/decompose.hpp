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

#ifndef HAA_DECOMPOSE_HPP
#define HAA_DECOMPOSE_HPP

#include "haa/circuit.hpp"

namespace haa {

/**
 * Rewrites a unitary circuit into single-qubit gates plus CZ.
 *
 * CNOT becomes H·CZ·H on the target. With `optimize` (the reported form) a
 * CAN gate becomes the three-CNOT canonical circuit, i.e. 3 CZ; without it
 * each of the three Pauli rotations is compiled separately (basis change,
 * CNOT, RZ, CNOT), 6 CZ per CAN. Weight-w Pauli rotations use a CNOT ladder
 * (2(w−1) CZ). Equal to the input up to global phase.
 *
 * Throws std::invalid_argument for channel circuits.
 */
Circuit decompose_to_cz(const Circuit& c, bool optimize = true);

struct ResourceReport {
  std::size_t n_params = 0;
  std::size_t n_two_qubit_gates = 0;
  std::size_t n_cz_after_decomposition = 0;
  std::size_t depth = 0;
};

/// Depth counts ASAP moments of the input gate list; MEASURE_RESET occupies
/// its qubits. CZ counts ignore measurements.
ResourceReport resource_report(const Circuit& c);

}  // namespace haa

#endif  // HAA_DECOMPOSE_HPP
