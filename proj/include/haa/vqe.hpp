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

#ifndef HAA_VQE_HPP
#define HAA_VQE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "haa/circuit.hpp"
#include "haa/observable.hpp"
#include "haa/optimize.hpp"
#include "haa/pauli.hpp"
#include "haa/simulator.hpp"

namespace haa {

/**
 * Energy plus symmetry penalties
 *   λ_N ⟨(N̂ − n)²⟩ + λ_S ⟨(Ŝ² − s(s+1))²⟩,
 * with N̂ and Ŝ² the Jordan–Wigner images over the system register.
 */
struct LossSpec {
  PauliOperator hamiltonian;
  Real lambda_number = 1.0;
  Real lambda_spin = 0.0;
  int target_electrons = 0;
  Real target_s = 0.0;
};

/// Penalty operators squared and simplified once, compiled over `n_system`.
class CompiledLoss {
 public:
  CompiledLoss(const LossSpec& spec, std::size_t n_system);

  const Observable& total() const { return total_; }
  const Observable& energy() const { return energy_; }
  /// (N̂ − n)² and (Ŝ² − s(s+1))²; empty when the weight is zero.
  const std::optional<Observable>& number_penalty() const { return number_; }
  const std::optional<Observable>& spin_penalty() const { return spin_; }
  const LossSpec& spec() const { return spec_; }

 private:
  LossSpec spec_;
  Observable total_;
  Observable energy_;
  std::optional<Observable> number_;
  std::optional<Observable> spin_;
};

/// ⟨H⟩ plus penalties on the circuit output. Throws std::invalid_argument
/// when a loss operator reaches past the system register.
Real loss(const Circuit& ansatz, std::span<const Real> params, const LossSpec& spec);

enum class InitDistribution { Uniform, Gaussian };
enum class OptimizerKind { Auto, LBFGS, Adam };

struct VqeConfig {
  std::size_t restarts = 10;
  std::size_t max_iterations = 1000;
  Real gradient_norm_tol = 1e-8;
  Real energy_change_tol = 1e-10;
  std::size_t patience = 10;
  InitDistribution init = InitDistribution::Uniform;
  Real init_sigma = 0.1;
  std::uint64_t base_seed = 0;
  /// Auto picks L-BFGS for unitary circuits and Adam for channel circuits.
  OptimizerKind optimizer = OptimizerKind::Auto;
  Real learning_rate = 0.05;
  std::size_t threads = 1;
  /// When set, restarts after the first one whose final loss is at or
  /// below this value are skipped (the cut is by restart index, so the
  /// result does not depend on the thread count).
  std::optional<Real> stop_at_loss;

  /// Throws std::invalid_argument.
  void validate() const;
};

struct RestartRecord {
  std::uint64_t seed = 0;
  std::vector<Real> trace;  // loss per accepted iterate
  Real final_loss = 0.0;
  Real final_energy = 0.0;
  Real gradient_norm = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  bool failed = false;
  std::string status;
  VectorXr initial_params;
  VectorXr params;
};

struct VqeResult {
  /// ⟨H⟩ of the restart with the lowest final loss.
  Real best_energy = 0.0;
  Real best_loss = 0.0;
  VectorXr best_params;
  std::size_t best_restart = 0;
  Real final_gradient_norm = 0.0;
  std::vector<RestartRecord> restarts;
  bool all_failed = false;
  /// Share of finished restarts whose loss lies within 1e-6 of the best.
  Real basin_fraction = 0.0;
  bool stopped_early = false;
};

VectorXr initial_parameters(std::size_t n_params, const VqeConfig& cfg, std::uint64_t seed);

VqeResult minimize(const Circuit& ansatz, const LossSpec& spec, const VqeConfig& cfg);

std::string_view optimizer_name(OptimizerKind k);
OptimizerKind parse_optimizer(std::string_view s);
InitDistribution parse_init(std::string_view s);
std::string_view init_name(InitDistribution d);

}  // namespace haa

#endif  // HAA_VQE_HPP
