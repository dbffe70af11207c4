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

#include "haa/ansatz.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "haa/fermion.hpp"
#include "haa/hamiltonian.hpp"

namespace haa {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::HEA:
      return "hea";
    case Family::HAA:
      return "haa";
    case Family::QRQNN:
      return "qrqnn";
    case Family::UCCSD:
      return "uccsd";
  }
  return "?";
}

std::string_view combo_name(GateCombo c) {
  return c == GateCombo::CAN ? "can" : "u3cx";
}

std::string_view coupling_name(Coupling c) {
  return c == Coupling::Adjacent ? "adjacent" : "cross";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

Family parse_family(std::string_view s) {
  const std::string l = lower(s);
  for (Family f : {Family::HEA, Family::HAA, Family::QRQNN, Family::UCCSD}) {
    if (l == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown ansatz family '" + std::string(s) + "'");
}

GateCombo parse_combo(std::string_view s) {
  const std::string l = lower(s);
  if (l == "can") return GateCombo::CAN;
  if (l == "u3cx") return GateCombo::U3CX;
  throw std::invalid_argument("unknown gate combination '" + std::string(s) + "'");
}

Coupling parse_coupling(std::string_view s) {
  const std::string l = lower(s);
  if (l == "adjacent" || l == "ac") return Coupling::Adjacent;
  if (l == "cross" || l == "cc") return Coupling::Cross;
  throw std::invalid_argument("unknown coupling '" + std::string(s) + "'");
}

void AnsatzSpec::validate() const {
  if (n_system == 0) throw std::invalid_argument("ansatz: n_system must be >= 1");
  if (n_electrons > n_system) {
    throw std::invalid_argument("ansatz: more electrons than system qubits");
  }
  switch (family) {
    case Family::HEA:
      if (n_ancilla != 0) throw std::invalid_argument("HEA takes no ancilla qubits");
      if (layers < 1) throw std::invalid_argument("HEA needs layers >= 1");
      break;
    case Family::HAA:
    case Family::QRQNN:
      if (layers < 1) throw std::invalid_argument("ansatz needs layers >= 1");
      if (coupling == Coupling::Cross && n_ancilla == 0) {
        throw std::invalid_argument("cross coupling needs at least one ancilla");
      }
      if (family == Family::QRQNN && n_ancilla == 0) {
        throw std::invalid_argument("qrQNN needs at least one ancilla");
      }
      if (coupling == Coupling::Adjacent && n_system + n_ancilla < 2) {
        throw std::invalid_argument("adjacent coupling needs two qubits");
      }
      break;
    case Family::UCCSD:
      if (n_ancilla != 0) throw std::invalid_argument("UCCSD takes no ancilla qubits");
      if (n_system % 2 != 0 || n_electrons % 2 != 0 || n_electrons == 0) {
        throw std::invalid_argument(
            "UCCSD needs an even spin-orbital count and a closed-shell, "
            "nonzero electron count");
      }
      break;
  }
}

std::string AnsatzSpec::label() const {
  switch (family) {
    case Family::HEA:
      return "HEA(" + std::to_string(layers) + ")";
    case Family::HAA:
      return "HAA(" + std::to_string(n_ancilla) + "," + std::to_string(layers) + ")";
    case Family::QRQNN:
      return "qrQNN(" + std::to_string(n_ancilla) + "," + std::to_string(layers) + ")";
    case Family::UCCSD:
      return "UCCSD";
  }
  return "?";
}

namespace {

class Builder {
 public:
  explicit Builder(Circuit& c) : c_(c) {}

  Angle fresh() { return Angle::param(c_.n_params++); }

  void u3(std::size_t q) {
    Angle t = fresh(), p = fresh(), l = fresh();
    c_.gates.push_back(Gate::u3(q, t, p, l));
  }
  void can(std::size_t a, std::size_t b) {
    Angle x = fresh(), y = fresh(), z = fresh();
    c_.gates.push_back(Gate::can(a, b, x, y, z));
  }
  void cnot(std::size_t a, std::size_t b) { c_.gates.push_back(Gate::cnot(a, b)); }

 private:
  Circuit& c_;
};

void hea_layer(Builder& b, std::size_t width) {
  for (std::size_t q = 0; q < width; ++q) b.u3(q);
  for (std::size_t q = 0; q + 1 < width; ++q) b.cnot(q, q + 1);
}

// Ordered (first, second) qubit pairs for one layer.
std::vector<std::pair<std::size_t, std::size_t>> coupled_pairs(
    const AnsatzSpec& s) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (s.coupling == Coupling::Cross) {
    for (std::size_t a = 0; a < s.n_ancilla; ++a) {
      for (std::size_t q = 0; q < s.n_system; ++q) pairs.emplace_back(q, s.n_system + a);
    }
  } else {
    const std::size_t width = s.n_system + s.n_ancilla;
    for (std::size_t q = 0; q + 1 < width; ++q) pairs.emplace_back(q, q + 1);
  }
  return pairs;
}

void layered(const AnsatzSpec& s, Circuit& c) {
  Builder b(c);
  const auto pairs = coupled_pairs(s);
  std::vector<std::size_t> ancillas;
  for (std::size_t a = 0; a < s.n_ancilla; ++a) ancillas.push_back(s.n_system + a);
  for (std::size_t l = 0; l < s.layers; ++l) {
    if (s.combo == GateCombo::CAN) {
      for (auto [p, q] : pairs) b.can(p, q);
    } else if (s.coupling == Coupling::Cross) {
      for (auto [p, q] : pairs) {
        b.u3(p);
        b.u3(q);
        b.cnot(p, q);
      }
    } else {
      hea_layer(b, c.width());
    }
    if (s.family == Family::QRQNN) c.gates.push_back(Gate::measure_reset(ancillas));
  }
}

// T − T† for one spatial excitation, shared across spin assignments.
FermionOperator excitation_generator(const std::vector<std::size_t>& occ,
                                     const std::vector<std::size_t>& virt) {
  FermionOperator t;
  if (occ.size() == 1) {
    for (int s = 0; s < 2; ++s) {
      t.add_term(1.0, {create(spin_orbital(virt[0], s)),
                       annihilate(spin_orbital(occ[0], s))});
    }
  } else {
    for (int s = 0; s < 2; ++s) {
      for (int u = 0; u < 2; ++u) {
        const auto i = spin_orbital(occ[0], s), j = spin_orbital(occ[1], u);
        const auto a = spin_orbital(virt[0], s), b = spin_orbital(virt[1], u);
        if (i == j || a == b) continue;
        t.add_term(1.0, {create(a), create(b), annihilate(j), annihilate(i)});
      }
    }
  }
  return t + t.adjoint() * Complex(-1.0);
}

void uccsd(const AnsatzSpec& s, Circuit& c) {
  const std::size_t n_spatial = s.n_system / 2;
  const std::size_t n_occ = s.n_electrons / 2;
  std::vector<std::vector<std::size_t>> occs, virts;
  for (std::size_t i = 0; i < n_occ; ++i) {
    for (std::size_t a = n_occ; a < n_spatial; ++a) {
      occs.push_back({i});
      virts.push_back({a});
    }
  }
  for (std::size_t i = 0; i < n_occ; ++i) {
    for (std::size_t j = i; j < n_occ; ++j) {
      for (std::size_t a = n_occ; a < n_spatial; ++a) {
        for (std::size_t b = a; b < n_spatial; ++b) {
          occs.push_back({i, j});
          virts.push_back({a, b});
        }
      }
    }
  }
  for (std::size_t e = 0; e < occs.size(); ++e) {
    const PauliOperator gen =
        jordan_wigner(excitation_generator(occs[e], virts[e]), s.n_system);
    if (gen.empty()) continue;
    const std::size_t slot = c.n_params++;
    // exp(θ Σ i·c_k P_k) = Π exp(−i/2 · (−2 c_k θ) P_k)
    for (const auto& t : gen.terms()) {
      c.gates.push_back(Gate::pauli_rot(t.string, Angle::param(slot, -2.0 * t.coefficient.imag())));
    }
  }
}

}  // namespace

Circuit build_ansatz(const AnsatzSpec& spec) {
  spec.validate();
  Circuit c;
  c.n_system = spec.n_system;
  c.n_ancilla = spec.n_ancilla;
  c.channel = spec.family == Family::QRQNN;
  for (std::size_t q = 0; q < spec.n_electrons; ++q) c.reference_occupations.push_back(q);
  switch (spec.family) {
    case Family::HEA: {
      Builder b(c);
      for (std::size_t l = 0; l < spec.layers; ++l) hea_layer(b, c.width());
      break;
    }
    case Family::HAA:
    case Family::QRQNN:
      layered(spec, c);
      break;
    case Family::UCCSD:
      uccsd(spec, c);
      break;
  }
  c.validate();
  return c;
}

std::size_t parameter_count(const AnsatzSpec& s) {
  s.validate();
  const std::size_t width = s.n_system + s.n_ancilla;
  switch (s.family) {
    case Family::HEA:
      return 3 * width * s.layers;
    case Family::HAA:
    case Family::QRQNN:
      if (s.combo == GateCombo::CAN) {
        const std::size_t pairs =
            s.coupling == Coupling::Cross ? s.n_system * s.n_ancilla : width - 1;
        return 3 * pairs * s.layers;
      }
      return s.coupling == Coupling::Cross ? 6 * s.n_system * s.n_ancilla * s.layers
                                           : 3 * width * s.layers;
    case Family::UCCSD: {
      const std::size_t o = s.n_electrons / 2, v = s.n_system / 2 - o;
      return o * v + (o * (o + 1) / 2) * (v * (v + 1) / 2);
    }
  }
  return 0;
}

}  // namespace haa
