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

#ifndef HAA_DESCRIPTORS_HPP
#define HAA_DESCRIPTORS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "haa/circuit.hpp"
#include "haa/pauli.hpp"
#include "haa/state.hpp"

namespace haa {

/// Register whose state fidelities are histogrammed.
enum class FidelityTarget { Full, System };

std::string_view target_name(FidelityTarget t);
FidelityTarget parse_target(std::string_view s);

struct ExpressibilityConfig {
  std::size_t n_pairs = 5000;
  std::size_t n_bins = 75;
  FidelityTarget target = FidelityTarget::System;
  std::uint64_t seed = 0;
  std::size_t bootstrap = 200;
  std::size_t threads = 1;

  /// Throws std::invalid_argument.
  void validate() const;
};

struct DescriptorResult {
  Real d_kl = 0.0;
  /// Bootstrap standard deviation of d_kl (0 without resamples).
  Real d_kl_sigma = 0.0;
  std::vector<Real> histogram;
  std::vector<Real> haar_reference;
  std::uint64_t n_effective_dim = 0;
  std::vector<Real> fidelities;
};

/// Haar mass of each of `n_bins` equal bins of [0, 1]:
/// (1 − lo)^{N−1} − (1 − hi)^{N−1}.
std::vector<Real> haar_bin_probabilities(std::uint64_t dim, std::size_t n_bins);

/// Normalized histogram; F = 1 falls in the last bin.
std::vector<Real> fidelity_histogram(std::span<const Real> fidelities, std::size_t n_bins);

/// Σ p ln(p / max(q, 1e-18)), skipping p = 0.
Real kl_divergence(std::span<const Real> p, std::span<const Real> q);

/// D_KL of a fidelity sample against the Haar law for dimension `dim`,
/// with `bootstrap` resamples for the error bar.
DescriptorResult expressibility_from_fidelities(std::vector<Real> fidelities,
                                                std::uint64_t dim, std::size_t n_bins,
                                                std::size_t bootstrap, std::uint64_t seed);

/**
 * Samples parameter pairs uniformly from [0, 2π)^n_params and histograms
 * the fidelity of the two output states. Full target: pure-state fidelity
 * over all qubits (unitary circuits only). System target: Uhlmann fidelity
 * of the system-register states, which is also used for every channel
 * circuit.
 */
DescriptorResult expressibility(const Circuit& ansatz, const ExpressibilityConfig& cfg);

struct GradientVarianceResult {
  Real variance = 0.0;
  Real variance_sigma = 0.0;
  Real mean = 0.0;
  std::size_t n_samples = 0;
  std::vector<Real> samples;
};

/// Unbiased sample variance of ∂E/∂θ₀ (shift rule) over uniform parameter
/// draws. Throws std::invalid_argument below 100 samples or for circuits
/// without parameters.
GradientVarianceResult gradient_variance(const Circuit& ansatz, const PauliOperator& obs,
                                         std::size_t n_samples, std::uint64_t seed,
                                         std::size_t bootstrap = 200, std::size_t threads = 1);

/// Z0 Z1 on the system register.
PauliOperator default_gradient_observable();

/// tr(ρ²).
Real purity(const DensityMatrix& rho);

/// Parameter vector for sample `index` of a run seeded with `seed`.
std::vector<Real> sample_parameters(std::size_t n_params, std::uint64_t seed,
                                    std::uint64_t index);

}  // namespace haa

#endif  // HAA_DESCRIPTORS_HPP
