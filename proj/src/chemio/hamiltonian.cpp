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

#include "haa/hamiltonian.hpp"

#include <cmath>

namespace haa {

namespace {

constexpr Real kIntegralCutoff = 1e-14;

}  // namespace

MolecularHamiltonian assemble(const MolecularIntegrals& integrals) {
  MolecularHamiltonian out;
  out.integrals = integrals;
  out.n_qubits = 2 * integrals.n_orb;
  const std::size_t n = integrals.n_orb;

  FermionOperator& f = out.fermion_op;
  if (integrals.e_core != 0.0) f.add_term(integrals.e_core, {});
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Real v = integrals.h(p, q);
      if (std::abs(v) < kIntegralCutoff) continue;
      for (int s = 0; s < 2; ++s) {
        f.add_term(v, {create(spin_orbital(p, s)), annihilate(spin_orbital(q, s))});
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
          const Real v = integrals.eri_at(p, q, r, s);
          if (std::abs(v) < kIntegralCutoff) continue;
          for (int sig = 0; sig < 2; ++sig) {
            for (int tau = 0; tau < 2; ++tau) {
              const auto P = spin_orbital(p, sig);
              const auto Q = spin_orbital(q, sig);
              const auto R = spin_orbital(r, tau);
              const auto S = spin_orbital(s, tau);
              if (P == R || Q == S) continue;  // a†a† or aa on one mode
              f.add_term(0.5 * v,
                         {create(P), create(R), annihilate(S), annihilate(Q)});
            }
          }
        }
      }
    }
  }
  out.qubit_op = jordan_wigner(f, out.n_qubits);
  return out;
}

}  // namespace haa
