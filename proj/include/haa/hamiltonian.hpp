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

#ifndef HAA_HAMILTONIAN_HPP
#define HAA_HAMILTONIAN_HPP

#include "haa/fcidump.hpp"
#include "haa/fermion.hpp"
#include "haa/pauli.hpp"

namespace haa {

/// Spin orbital index under the interleaved convention (α even, β odd).
inline std::uint32_t spin_orbital(std::size_t spatial, int spin) {
  return static_cast<std::uint32_t>(2 * spatial + static_cast<std::size_t>(spin));
}

struct MolecularHamiltonian {
  MolecularIntegrals integrals;
  FermionOperator fermion_op;
  PauliOperator qubit_op;
  std::size_t n_qubits = 0;
};

/**
 * Builds
 *   H = e_core + Σ h_pq a†_pσ a_qσ
 *       + ½ Σ (pq|rs) a†_pσ a†_rτ a_sτ a_qσ
 * over interleaved spin orbitals, i.e. the a†a†aa form with the physicists'
 * integral ⟨pr|qs⟩ = (pq|rs), then maps it with Jordan–Wigner.
 */
MolecularHamiltonian assemble(const MolecularIntegrals& integrals);

}  // namespace haa

#endif  // HAA_HAMILTONIAN_HPP
