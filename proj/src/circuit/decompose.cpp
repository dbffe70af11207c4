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

#include "haa/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace haa {

namespace {

constexpr Real kHalfPi = kPi / 2;

class Emitter {
 public:
  explicit Emitter(std::vector<Gate>& out) : out_(out) {}

  void one(Gate g) { out_.push_back(std::move(g)); }
  void cnot(std::size_t c, std::size_t t) {
    out_.push_back(Gate::h(t));
    out_.push_back(Gate::cz(c, t));
    out_.push_back(Gate::h(t));
  }

  // Maps the axis onto Z: V P V† = Z.
  void to_z(std::size_t q, Axis a) {
    if (a == Axis::X) {
      one(Gate::h(q));
    } else if (a == Axis::Y) {
      one(Gate::rz(q, Angle::literal(-kHalfPi)));
      one(Gate::h(q));
    }
  }
  void from_z(std::size_t q, Axis a) {
    if (a == Axis::X) {
      one(Gate::h(q));
    } else if (a == Axis::Y) {
      one(Gate::h(q));
      one(Gate::rz(q, Angle::literal(kHalfPi)));
    }
  }

  void pauli_rotation(const PauliString& p, const Angle& theta) {
    const auto& f = p.factors();
    if (f.empty()) return;  // global phase only
    for (const auto& [q, a] : f) to_z(q, a);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) cnot(f[i].first, f[i + 1].first);
    one(Gate::rz(f.back().first, theta));
    for (std::size_t i = f.size() - 1; i > 0; --i) cnot(f[i - 1].first, f[i].first);
    for (const auto& [q, a] : f) from_z(q, a);
  }

  // Three-CNOT circuit for exp(−i/2 (a XX + b YY + c ZZ)) on (q0, q1).
  void can3(std::size_t q0, std::size_t q1, const Angle& a, const Angle& b,
            const Angle& c) {
    one(Gate::rz(q1, Angle::literal(kHalfPi)));
    cnot(q1, q0);
    one(Gate::rz(q0, Angle{c.slot, c.scale, c.offset + kHalfPi}));
    one(Gate::ry(q1, Angle{a.slot, a.scale, a.offset + kHalfPi}));
    cnot(q0, q1);
    one(Gate::ry(q1, Angle{b.slot, -b.scale, -b.offset - kHalfPi}));
    cnot(q1, q0);
    one(Gate::rz(q0, Angle::literal(-kHalfPi)));
  }

 private:
  std::vector<Gate>& out_;
};

}  // namespace

Circuit decompose_to_cz(const Circuit& c, bool optimize) {
  if (c.channel) {
    throw std::invalid_argument("decompose_to_cz: channel circuits are not unitary");
  }
  Circuit out = c;
  out.gates.clear();
  Emitter e(out.gates);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::U3:
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
      case GateKind::H:
      case GateKind::CZ:
        e.one(g);
        break;
      case GateKind::CNOT:
        e.cnot(g.targets[0], g.targets[1]);
        break;
      case GateKind::CAN: {
        const auto q0 = static_cast<std::uint32_t>(g.targets[0]);
        const auto q1 = static_cast<std::uint32_t>(g.targets[1]);
        if (optimize) {
          e.can3(q0, q1, g.angles[0], g.angles[1], g.angles[2]);
        } else {
          e.pauli_rotation(PauliString{{q0, Axis::X}, {q1, Axis::X}}, g.angles[0]);
          e.pauli_rotation(PauliString{{q0, Axis::Y}, {q1, Axis::Y}}, g.angles[1]);
          e.pauli_rotation(PauliString{{q0, Axis::Z}, {q1, Axis::Z}}, g.angles[2]);
        }
        break;
      }
      case GateKind::PauliRot:
        e.pauli_rotation(g.pauli, g.angles[0]);
        break;
      case GateKind::MeasureReset:
        throw std::invalid_argument("decompose_to_cz: measure_reset present");
    }
  }
  return out;
}

ResourceReport resource_report(const Circuit& c) {
  ResourceReport r;
  r.n_params = c.n_params;
  std::vector<std::size_t> last(c.width(), 0);
  for (const Gate& g : c.gates) {
    if (g.is_two_qubit()) ++r.n_two_qubit_gates;
    std::size_t moment = 0;
    for (auto q : g.targets) moment = std::max(moment, last[q]);
    ++moment;
    for (auto q : g.targets) last[q] = moment;
    r.depth = std::max(r.depth, moment);
  }
  const Circuit lowered = decompose_to_cz(strip_measurements(c), true);
  r.n_cz_after_decomposition = static_cast<std::size_t>(
      std::count_if(lowered.gates.begin(), lowered.gates.end(),
                    [](const Gate& g) { return g.kind == GateKind::CZ; }));
  return r;
}

}  // namespace haa
