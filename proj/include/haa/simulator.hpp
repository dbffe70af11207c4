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

#ifndef HAA_SIMULATOR_HPP
#define HAA_SIMULATOR_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "haa/circuit.hpp"
#include "haa/observable.hpp"
#include "haa/state.hpp"

namespace haa {

struct EnergyGradient {
  Real value = 0.0;
  VectorXr gradient;
};

/**
 * A circuit lowered to primitive operations: Pauli rotations exp(−iθP/2)
 * (U3 becomes RZ·RY·RZ), fused CAN blocks (three commuting rotations
 * applied in one sweep), fixed one-qubit matrices, CNOT, CZ and resets.
 *
 * Immutable after construction and safe to share between threads.
 */
class Program {
 public:
  explicit Program(const Circuit& circuit);

  const Circuit& circuit() const { return circuit_; }
  std::size_t n_params() const { return circuit_.n_params; }

  /// Pure evolution from the reference state. Throws for channel circuits
  /// and for a parameter-length mismatch.
  StateVector run(std::span<const Real> params) const;

  /// System-register state after evolving ρ_in ⊗ |0…0⟩⟨0…0|_anc through
  /// every gate (unitary or reset) and tracing out the ancillas.
  DensityMatrix run_density(std::span<const Real> params,
                            const DensityMatrix& rho_in) const;
  /// As above from the reference occupations.
  DensityMatrix run_density(std::span<const Real> params) const;

  /// ⟨H⟩ on the output (pure path for unitary circuits, density path for
  /// channel circuits).
  Real energy(std::span<const Real> params, const Observable& obs) const;

  /// ∂E/∂θ by the two-term shift rule, summed over every occurrence of
  /// each parameter (valid for pure and channel circuits).
  VectorXr parameter_shift(std::span<const Real> params, const Observable& obs) const;
  Real parameter_shift_component(std::span<const Real> params, const Observable& obs,
                                 std::size_t slot) const;

  /// Energy and full gradient by reverse-mode (adjoint state) sweep; pure
  /// circuits only. Agrees with the shift rule to rounding.
  EnergyGradient adjoint(std::span<const Real> params, const Observable& obs) const;

  struct Op;

 private:
  typedef std::vector<std::array<Real, 3>> Resolved;

  Resolved resolve(std::span<const Real> params) const;
  void check_params(std::span<const Real> params) const;
  StateVector run_resolved(const Resolved& angles) const;
  DensityMatrix run_density_resolved(const Resolved& angles,
                                     const DensityMatrix& rho_in) const;
  Real energy_resolved(const Resolved& angles, const Observable& obs) const;
  DensityMatrix reference_density() const;

  Circuit circuit_;
  std::vector<Op> ops_;
  // (op index, angle index) pairs that read each parameter slot.
  std::vector<std::vector<std::pair<std::size_t, int>>> slot_ops_;
};

struct Program::Op {
  enum class Kind { Rotation, Can, Fixed1, Cnot, Cz, Reset };
  Kind kind = Kind::Fixed1;
  BasisIndex x = 0, z = 0;
  int ny = 0;
  // Rotation uses angles[0]; Can uses (tx, ty, tz).
  std::array<Angle, 3> angles;
  int q0 = 0, q1 = 0;
  Matrix2c m = Matrix2c::Identity();
  std::vector<std::size_t> reset;
};

// Convenience wrappers around Program.

StateVector run_pure(const Circuit& c, std::span<const Real> params);

/// Throws std::invalid_argument unless `c` is flagged as a channel circuit.
DensityMatrix run_channel(const Circuit& c, std::span<const Real> params,
                          const DensityMatrix& rho_in);

/// ∂E/∂θ by the shift rule.
VectorXr gradient(const Circuit& c, std::span<const Real> params,
                  const PauliOperator& obs);

/// Throws std::domain_error when `obs` is not Hermitian.
Real expectation(const PauliOperator& obs, const StateVector& psi);
Real expectation(const PauliOperator& obs, const DensityMatrix& rho);

/// Reduced state on `keep` (ascending order). Throws std::invalid_argument
/// for an empty or out-of-range keep set.
DensityMatrix partial_trace(const StateVector& psi, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

/// Fast path: keep qubits [0, n_low).
DensityMatrix reduce_to_low_qubits(const StateVector& psi, std::size_t n_low);
DensityMatrix reduce_to_low_qubits(const DensityMatrix& rho, std::size_t n_low);

/// |⟨a|b⟩|².
Real fidelity(const StateVector& a, const StateVector& b);
/// (tr √(√ρ σ √ρ))².
Real uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Uhlmann fidelity of ρ = AA† and σ = BB†, computed as ‖A†B‖²_tr.
Real purified_fidelity(const Eigen::Ref<const MatrixXc>& a,
                       const Eigen::Ref<const MatrixXc>& b);

/// State of the low `n_low` qubits viewed as a 2^n_low × 2^(n−n_low)
/// purification matrix (columns indexed by the high qubits).
Eigen::Map<const MatrixXc> purification_view(const StateVector& psi, std::size_t n_low);

}  // namespace haa

#endif  // HAA_SIMULATOR_HPP
