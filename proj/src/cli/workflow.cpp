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

#include "haa/workflow.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "haa/descriptors.hpp"
#include "haa/fermion.hpp"
#include "haa/simulator.hpp"

namespace haa {

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FcidumpError("cannot open " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Problem p;
  p.path = path.string();
  p.digest = fnv1a64_hex(text);
  p.integrals = parse_fcidump_string(text);
  p.hamiltonian = assemble(p.integrals);
  SectorConstraint sector;
  sector.electron_count = p.integrals.n_elec;
  sector.sz = 0.5 * p.integrals.ms2;
  p.fci = ground_state(p.hamiltonian.qubit_op, p.hamiltonian.n_qubits, sector);
  return p;
}

AnsatzSpec molecular_ansatz(const Problem& p, Family family, std::size_t n_ancilla,
                            std::size_t layers, GateCombo combo, Coupling coupling) {
  AnsatzSpec s;
  s.family = family;
  s.n_system = p.hamiltonian.n_qubits;
  s.n_ancilla = n_ancilla;
  s.layers = layers;
  s.combo = combo;
  s.coupling = coupling;
  s.n_electrons = static_cast<std::size_t>(p.integrals.n_elec);
  return s;
}

LossSpec molecular_loss(const Problem& p, Real lambda_number, Real lambda_spin) {
  LossSpec l;
  l.hamiltonian = p.hamiltonian.qubit_op;
  l.lambda_number = lambda_number;
  l.lambda_spin = lambda_spin;
  l.target_electrons = p.integrals.n_elec;
  l.target_s = 0.5 * std::abs(p.integrals.ms2);
  return l;
}

DensityMatrix output_state(const Circuit& c, std::span<const Real> params) {
  const Program program(c);
  if (c.channel) return program.run_density(params);
  return reduce_to_low_qubits(program.run(params), c.n_system);
}

PointResult solve_point(const Problem& p, const AnsatzSpec& spec, const LossSpec& loss,
                        const VqeConfig& cfg) {
  const Circuit circuit = build_ansatz(spec);
  PointResult r;
  r.vqe = minimize(circuit, loss, cfg);
  r.fci_energy = p.fci.energy;
  if (r.vqe.all_failed) return r;
  r.error = r.vqe.best_energy - r.fci_energy;
  const std::span<const Real> params(r.vqe.best_params.data(),
                                     static_cast<std::size_t>(r.vqe.best_params.size()));
  r.rho_out = output_state(circuit, params);
  r.purity = purity(r.rho_out);
  const std::size_t n = circuit.n_system;
  r.number_expectation =
      Observable(jordan_wigner(number_operator(n), n), n).expectation(r.rho_out);
  const CompiledLoss compiled(loss, n);
  if (compiled.number_penalty()) r.number_penalty = compiled.number_penalty()->expectation(r.rho_out);
  if (compiled.spin_penalty()) r.spin_penalty = compiled.spin_penalty()->expectation(r.rho_out);
  r.fci_overlap = state_overlap(r.rho_out, p.fci.state);
  return r;
}

}  // namespace haa
