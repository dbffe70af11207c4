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

#ifndef HAA_CIRCUIT_HPP
#define HAA_CIRCUIT_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "haa/pauli.hpp"
#include "haa/types.hpp"

namespace haa {

/// A gate angle: either a literal or `scale * params[slot] + offset`.
struct Angle {
  std::optional<std::size_t> slot;
  Real scale = 1.0;
  Real offset = 0.0;

  static Angle literal(Real value) { return {std::nullopt, 0.0, value}; }
  static Angle param(std::size_t slot, Real scale = 1.0, Real offset = 0.0) {
    return {slot, scale, offset};
  }

  bool is_literal() const { return !slot.has_value(); }
  Real value(std::span<const Real> params) const {
    return slot ? scale * params[*slot] + offset : offset;
  }
};

enum class GateKind { U3, RX, RY, RZ, H, CNOT, CZ, CAN, PauliRot, MeasureReset };

std::string_view gate_name(GateKind kind);

/**
 * One instruction of the circuit IR.
 *
 * Angle conventions: RX/RY/RZ(θ) = exp(−iθP/2); U3(θ,φ,λ) = RZ(φ)RY(θ)RZ(λ)
 * with angles stored as {θ, φ, λ}; CAN(tx,ty,tz) on targets {a, b} =
 * exp(−i/2 (tx XX + ty YY + tz ZZ)); PauliRot(θ, P) = exp(−iθP/2) where P
 * lives on `targets`. CNOT targets are {control, target}.
 */
struct Gate {
  GateKind kind;
  std::vector<std::size_t> targets;
  std::vector<Angle> angles;
  PauliString pauli;

  static Gate u3(std::size_t q, Angle theta, Angle phi, Angle lambda);
  static Gate rx(std::size_t q, Angle theta);
  static Gate ry(std::size_t q, Angle theta);
  static Gate rz(std::size_t q, Angle theta);
  static Gate h(std::size_t q);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate cz(std::size_t a, std::size_t b);
  static Gate can(std::size_t a, std::size_t b, Angle tx, Angle ty, Angle tz);
  static Gate pauli_rot(const PauliString& p, Angle theta);
  static Gate measure_reset(std::vector<std::size_t> qubits);

  bool is_two_qubit() const;
};

/**
 * Gate-list program over `n_system` system qubits followed by `n_ancilla`
 * ancillas (indices [n_system, n_system + n_ancilla)). System qubits listed
 * in `reference_occupations` start in |1⟩, everything else in |0⟩.
 */
struct Circuit {
  std::size_t n_system = 0;
  std::size_t n_ancilla = 0;
  std::vector<Gate> gates;
  std::size_t n_params = 0;
  std::vector<std::size_t> reference_occupations;
  bool channel = false;

  std::size_t width() const { return n_system + n_ancilla; }

  /// Throws std::invalid_argument on any structural violation.
  void validate() const;
};

/// Drops MEASURE_RESET gates and clears the channel flag.
Circuit strip_measurements(const Circuit& c);

}  // namespace haa

#endif  // HAA_CIRCUIT_HPP
