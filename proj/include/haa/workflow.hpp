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

#ifndef HAA_WORKFLOW_HPP
#define HAA_WORKFLOW_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "haa/ansatz.hpp"
#include "haa/exact.hpp"
#include "haa/fcidump.hpp"
#include "haa/hamiltonian.hpp"
#include "haa/vqe.hpp"

namespace haa {

inline constexpr std::string_view kToolName = "haalab";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// FNV-1a 64-bit digest, rendered as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

/// A molecule ready for VQE: integrals, qubit Hamiltonian and the exact
/// ground state in the file's electron-count and Sz sector.
struct Problem {
  std::string path;
  std::string digest;
  MolecularIntegrals integrals;
  MolecularHamiltonian hamiltonian;
  GroundState fci;
};

/// Throws FcidumpError for unreadable or malformed files.
Problem load_problem(const std::filesystem::path& path);

/// Ansatz over the problem's qubits with the Hartree–Fock reference.
AnsatzSpec molecular_ansatz(const Problem& p, Family family, std::size_t n_ancilla,
                            std::size_t layers, GateCombo combo = GateCombo::CAN,
                            Coupling coupling = Coupling::Cross);

/// Energy loss with the default number penalty; spin target s = ms2/2.
LossSpec molecular_loss(const Problem& p, Real lambda_number = 1.0, Real lambda_spin = 0.0);

struct PointResult {
  VqeResult vqe;
  Real fci_energy = 0.0;
  /// best_energy − fci_energy.
  Real error = 0.0;
  Real purity = 0.0;
  Real number_expectation = 0.0;
  Real number_penalty = 0.0;
  Real spin_penalty = 0.0;
  /// ⟨ψ_FCI|ρ^out|ψ_FCI⟩.
  Real fci_overlap = 0.0;
  DensityMatrix rho_out{1};
};

PointResult solve_point(const Problem& p, const AnsatzSpec& spec, const LossSpec& loss,
                        const VqeConfig& cfg);

/// System-register output state of a circuit at `params`.
DensityMatrix output_state(const Circuit& c, std::span<const Real> params);

}  // namespace haa

#endif  // HAA_WORKFLOW_HPP
