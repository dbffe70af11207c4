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

#include "haa/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace haa {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::U3:
      return "u3";
    case GateKind::RX:
      return "rx";
    case GateKind::RY:
      return "ry";
    case GateKind::RZ:
      return "rz";
    case GateKind::H:
      return "h";
    case GateKind::CNOT:
      return "cnot";
    case GateKind::CZ:
      return "cz";
    case GateKind::CAN:
      return "can";
    case GateKind::PauliRot:
      return "pauli_rot";
    case GateKind::MeasureReset:
      return "measure_reset";
  }
  return "unknown";
}

Gate Gate::u3(std::size_t q, Angle theta, Angle phi, Angle lambda) {
  return {GateKind::U3, {q}, {theta, phi, lambda}, {}};
}
Gate Gate::rx(std::size_t q, Angle theta) { return {GateKind::RX, {q}, {theta}, {}}; }
Gate Gate::ry(std::size_t q, Angle theta) { return {GateKind::RY, {q}, {theta}, {}}; }
Gate Gate::rz(std::size_t q, Angle theta) { return {GateKind::RZ, {q}, {theta}, {}}; }
Gate Gate::h(std::size_t q) { return {GateKind::H, {q}, {}, {}}; }
Gate Gate::cnot(std::size_t control, std::size_t target) {
  return {GateKind::CNOT, {control, target}, {}, {}};
}
Gate Gate::cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}, {}, {}}; }
Gate Gate::can(std::size_t a, std::size_t b, Angle tx, Angle ty, Angle tz) {
  return {GateKind::CAN, {a, b}, {tx, ty, tz}, {}};
}
Gate Gate::pauli_rot(const PauliString& p, Angle theta) {
  std::vector<std::size_t> targets;
  for (const auto& f : p.factors()) targets.push_back(f.first);
  return {GateKind::PauliRot, std::move(targets), {theta}, p};
}
Gate Gate::measure_reset(std::vector<std::size_t> qubits) {
  std::sort(qubits.begin(), qubits.end());
  return {GateKind::MeasureReset, std::move(qubits), {}, {}};
}

bool Gate::is_two_qubit() const {
  return kind != GateKind::MeasureReset && targets.size() >= 2;
}

namespace {

std::size_t expected_angles(GateKind k) {
  switch (k) {
    case GateKind::U3:
    case GateKind::CAN:
      return 3;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::PauliRot:
      return 1;
    default:
      return 0;
  }
}

}  // namespace

void Circuit::validate() const {
  std::vector<bool> used(n_params, false);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    const std::string where = "gate " + std::to_string(g) + " (" +
                              std::string(gate_name(gate.kind)) + ")";
    if (gate.targets.empty()) throw std::invalid_argument(where + ": no targets");
    for (std::size_t i = 0; i < gate.targets.size(); ++i) {
      if (gate.targets[i] >= width()) {
        throw std::invalid_argument(where + ": target outside circuit width");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (gate.targets[i] == gate.targets[j]) {
          throw std::invalid_argument(where + ": repeated target");
        }
      }
    }
    if (gate.kind == GateKind::MeasureReset && !channel) {
      throw std::invalid_argument(where + ": measure_reset in a unitary circuit");
    }
    if (gate.angles.size() != expected_angles(gate.kind)) {
      throw std::invalid_argument(where + ": wrong number of angles");
    }
    if (gate.kind == GateKind::PauliRot &&
        gate.pauli.weight() != gate.targets.size()) {
      throw std::invalid_argument(where + ": pauli support mismatch");
    }
    for (const auto& a : gate.angles) {
      if (!a.slot) continue;
      if (*a.slot >= n_params) {
        throw std::invalid_argument(where + ": parameter slot out of range");
      }
      used[*a.slot] = true;
    }
  }
  for (std::size_t k = 0; k < n_params; ++k) {
    if (!used[k]) {
      throw std::invalid_argument("parameter slot " + std::to_string(k) +
                                  " is never referenced");
    }
  }
  for (auto q : reference_occupations) {
    if (q >= n_system) {
      throw std::invalid_argument("reference occupation outside system register");
    }
  }
}

Circuit strip_measurements(const Circuit& c) {
  Circuit out = c;
  out.channel = false;
  std::erase_if(out.gates,
                [](const Gate& g) { return g.kind == GateKind::MeasureReset; });
  return out;
}

}  // namespace haa
