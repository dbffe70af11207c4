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

#ifndef HAA_ANSATZ_HPP
#define HAA_ANSATZ_HPP

#include <string>
#include <string_view>

#include "haa/circuit.hpp"

namespace haa {

enum class Family { HEA, HAA, QRQNN, UCCSD };
enum class GateCombo { CAN, U3CX };
enum class Coupling { Adjacent, Cross };

/**
 * Declarative ansatz description.
 *
 * HEA(L): per layer a U3 on every qubit, then CNOTs 0→1, 1→2, … (open
 * chain). HAA(n, L): per layer, the chosen two-qubit block on every coupled
 * pair; CAN/cross is the default. QRQNN(n, L): HAA(n, L) layers, each
 * followed by measure-and-reset of the ancilla register. UCCSD: one Trotter
 * step of JW-mapped singles and doubles; needs `n_electrons`.
 *
 * `n_electrons` also sets the Hartree–Fock reference: system qubits
 * [0, n_electrons) start in |1⟩.
 */
struct AnsatzSpec {
  Family family = Family::HAA;
  std::size_t n_system = 0;
  std::size_t n_ancilla = 0;
  std::size_t layers = 1;
  GateCombo combo = GateCombo::CAN;
  Coupling coupling = Coupling::Cross;
  std::size_t n_electrons = 0;

  /// Throws std::invalid_argument for inconsistent combinations.
  void validate() const;
  /// HAA(1,8), HEA(25), qrQNN(1,2), UCCSD.
  std::string label() const;
};

Circuit build_ansatz(const AnsatzSpec& spec);

/// Closed-form parameter count of `build_ansatz(spec)`.
std::size_t parameter_count(const AnsatzSpec& spec);

std::string_view family_name(Family f);
std::string_view combo_name(GateCombo c);
std::string_view coupling_name(Coupling c);
/// Case-insensitive; throws std::invalid_argument on unknown names.
Family parse_family(std::string_view s);
GateCombo parse_combo(std::string_view s);
Coupling parse_coupling(std::string_view s);

}  // namespace haa

#endif  // HAA_ANSATZ_HPP
