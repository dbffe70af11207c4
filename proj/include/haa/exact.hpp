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

#ifndef HAA_EXACT_HPP
#define HAA_EXACT_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "haa/circuit.hpp"
#include "haa/pauli.hpp"
#include "haa/state.hpp"
#include "haa/types.hpp"

namespace haa {

inline constexpr std::size_t kExactQubitLimit = 16;

/// Basis-state filter under Jordan–Wigner with interleaved spins: the
/// electron count is the Hamming weight, Sz = (#α − #β)/2.
struct SectorConstraint {
  std::optional<int> electron_count;
  std::optional<Real> sz;

  bool unconstrained() const { return !electron_count && !sz; }
  bool admits(BasisIndex b) const;
  /// Admitted basis indices of an n-qubit register, ascending.
  std::vector<BasisIndex> basis(std::size_t n_qubits) const;
};

/// Sparse matrix Σ c_k P_k, each P_k built as a Kronecker product of
/// per-qubit 2×2 factors (qubit n−1 leftmost). Throws std::invalid_argument
/// beyond 16 qubits or when the support exceeds n_qubits.
SparseMatrixXc to_matrix(const PauliOperator& op, std::size_t n_qubits);

struct GroundState {
  Real energy = 0.0;
  StateVector state{1};
  Real residual = 0.0;
  std::size_t iterations = 0;
};

/// Lowest eigenpair within the sector by Lanczos (full reorthogonalization,
/// thick restart on the Ritz vector). Throws std::domain_error for
/// non-Hermitian input, std::runtime_error for an empty sector or when the
/// residual stays above 1e-10.
GroundState ground_state(const PauliOperator& op, std::size_t n_qubits,
                         const SectorConstraint& sector = {});

/// Lowest eigenpair of a Hermitian sparse matrix.
struct Eigenpair {
  Real value = 0.0;
  VectorXc vector;
  Real residual = 0.0;
  std::size_t iterations = 0;
};
Eigenpair lanczos_lowest(const SparseMatrixXc& h, Real tol = 1e-10,
                         std::size_t max_krylov = 120, std::size_t max_restarts = 50);

struct ConfigurationEntry {
  BasisIndex index = 0;
  std::string bitstring;  // qubit n−1 first
  Real coefficient = 0.0;
};

struct ConfigurationTable {
  std::vector<ConfigurationEntry> entries;
  /// Largest |imaginary part| discarded after the phase fix.
  Real max_imaginary = 0.0;
};

/**
 * Real signed configuration coefficients after rotating the global phase
 * so the largest-magnitude amplitude is positive. With a sector, every
 * admitted basis state is listed; unconstrained, only amplitudes above
 * 1e-12 are. Sorted by basis index.
 */
ConfigurationTable configuration_table(const StateVector& psi,
                                       const SectorConstraint& sector = {});

/// Header `index,bitstring,coefficient`, coefficients in %.17g.
void write_configuration_csv(std::ostream& out, const ConfigurationTable& table);

/// Largest |Δcoefficient| over the union of both tables' indices.
Real max_coefficient_deviation(const ConfigurationTable& a, const ConfigurationTable& b);

/// |⟨a|b⟩|²; throws std::invalid_argument on a dimension mismatch.
Real state_overlap(const StateVector& a, const StateVector& b);
/// ⟨ψ|ρ|ψ⟩.
Real state_overlap(const DensityMatrix& rho, const StateVector& psi);

/// Eigenvector of the largest eigenvalue of ρ.
StateVector principal_state(const DensityMatrix& rho);

/// Dense unitary of a unitary circuit as the ordered product of embedded
/// gate matrices (no statevector kernels involved). Width ≤ 10.
MatrixXc circuit_unitary(const Circuit& c, std::span<const Real> params);

/// Embeds a local gate matrix (gate-local little-endian order over
/// `targets`) into an n-qubit register.
MatrixXc embed(const MatrixXc& local, std::span<const std::size_t> targets,
               std::size_t n_qubits);

}  // namespace haa

#endif  // HAA_EXACT_HPP
