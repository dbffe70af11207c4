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

#include "haa/descriptors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "haa/parallel.hpp"
#include "haa/simulator.hpp"

namespace haa {

namespace {

constexpr Real kHaarFloor = 1e-18;

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Bootstrap resamples draw from a stream index no sample uses.
constexpr std::uint64_t kBootstrapStream = ~std::uint64_t{0};

Real sample_variance(std::span<const Real> x, Real* mean_out = nullptr) {
  const auto n = static_cast<Real>(x.size());
  Real mean = 0.0;
  for (Real v : x) mean += v;
  mean /= n;
  Real ss = 0.0;
  for (Real v : x) ss += (v - mean) * (v - mean);
  if (mean_out) *mean_out = mean;
  return x.size() > 1 ? ss / (n - 1) : 0.0;
}

template <typename Statistic>
Real bootstrap_sigma(std::span<const Real> x, std::size_t resamples, std::uint64_t seed,
                     Statistic stat) {
  if (resamples < 2 || x.empty()) return 0.0;
  std::mt19937_64 rng = stream(seed, kBootstrapStream);
  std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
  std::vector<Real> values(resamples), draw(x.size());
  for (auto& v : values) {
    for (auto& d : draw) d = x[pick(rng)];
    v = stat(std::span<const Real>(draw));
  }
  return std::sqrt(sample_variance(values));
}

}  // namespace

std::string_view target_name(FidelityTarget t) {
  return t == FidelityTarget::Full ? "full" : "system";
}

FidelityTarget parse_target(std::string_view s) {
  std::string v(s);
  for (auto& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (v == "full") return FidelityTarget::Full;
  if (v == "system" || v == "reduced") return FidelityTarget::System;
  throw std::invalid_argument("unknown fidelity target '" + std::string(s) + "'");
}

void ExpressibilityConfig::validate() const {
  if (n_pairs < 100) throw std::invalid_argument("expressibility: n_pairs must be at least 100");
  if (n_bins < 10) throw std::invalid_argument("expressibility: n_bins must be at least 10");
}

std::vector<Real> haar_bin_probabilities(std::uint64_t dim, std::size_t n_bins) {
  if (dim < 2) throw std::invalid_argument("haar_bin_probabilities: dimension below 2");
  std::vector<Real> q(n_bins);
  const auto e = static_cast<Real>(dim - 1);
  for (std::size_t b = 0; b < n_bins; ++b) {
    const Real lo = static_cast<Real>(b) / static_cast<Real>(n_bins);
    const Real hi = static_cast<Real>(b + 1) / static_cast<Real>(n_bins);
    q[b] = std::pow(1 - lo, e) - std::pow(1 - hi, e);
  }
  return q;
}

std::vector<Real> fidelity_histogram(std::span<const Real> fidelities, std::size_t n_bins) {
  std::vector<Real> h(n_bins, 0.0);
  if (fidelities.empty()) return h;
  for (Real f : fidelities) {
    const auto b = static_cast<std::size_t>(std::clamp<Real>(f, 0.0, 1.0) * static_cast<Real>(n_bins));
    h[std::min(b, n_bins - 1)] += 1.0;
  }
  for (auto& v : h) v /= static_cast<Real>(fidelities.size());
  return h;
}

Real kl_divergence(std::span<const Real> p, std::span<const Real> q) {
  if (p.size() != q.size()) throw std::invalid_argument("kl_divergence: size mismatch");
  Real d = 0.0;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p[b] > 0) d += p[b] * std::log(p[b] / std::max(q[b], kHaarFloor));
  }
  return d;
}

DescriptorResult expressibility_from_fidelities(std::vector<Real> fidelities, std::uint64_t dim,
                                                std::size_t n_bins, std::size_t bootstrap,
                                                std::uint64_t seed) {
  DescriptorResult r;
  r.n_effective_dim = dim;
  r.haar_reference = haar_bin_probabilities(dim, n_bins);
  r.histogram = fidelity_histogram(fidelities, n_bins);
  r.d_kl = kl_divergence(r.histogram, r.haar_reference);
  r.d_kl_sigma = bootstrap_sigma(fidelities, bootstrap, seed, [&](std::span<const Real> s) {
    return kl_divergence(fidelity_histogram(s, n_bins), r.haar_reference);
  });
  r.fidelities = std::move(fidelities);
  return r;
}

std::vector<Real> sample_parameters(std::size_t n_params, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng = stream(seed, index);
  std::uniform_real_distribution<Real> u(0.0, 2 * kPi);
  std::vector<Real> p(n_params);
  for (auto& v : p) v = u(rng);
  return p;
}

DescriptorResult expressibility(const Circuit& ansatz, const ExpressibilityConfig& cfg) {
  cfg.validate();
  const Program program(ansatz);
  const bool full = cfg.target == FidelityTarget::Full;
  if (full && ansatz.channel) {
    throw std::invalid_argument("expressibility: full-register target needs a unitary circuit");
  }
  const std::size_t n_params = ansatz.n_params;
  std::vector<Real> fidelities(cfg.n_pairs);
  parallel_for(cfg.n_pairs, cfg.threads, [&](std::size_t i) {
    const auto a = sample_parameters(n_params, cfg.seed, 2 * i);
    const auto b = sample_parameters(n_params, cfg.seed, 2 * i + 1);
    if (ansatz.channel) {
      fidelities[i] = uhlmann_fidelity(program.run_density(a), program.run_density(b));
      return;
    }
    const StateVector sa = program.run(a), sb = program.run(b);
    fidelities[i] = full ? fidelity(sa, sb)
                         : purified_fidelity(purification_view(sa, ansatz.n_system),
                                             purification_view(sb, ansatz.n_system));
  });
  const std::uint64_t dim = dimension_of(full ? ansatz.width() : ansatz.n_system);
  return expressibility_from_fidelities(std::move(fidelities), dim, cfg.n_bins, cfg.bootstrap,
                                        cfg.seed);
}

GradientVarianceResult gradient_variance(const Circuit& ansatz, const PauliOperator& obs,
                                         std::size_t n_samples, std::uint64_t seed,
                                         std::size_t bootstrap, std::size_t threads) {
  if (n_samples < 100) throw std::invalid_argument("gradient_variance: n_samples must be at least 100");
  if (ansatz.n_params == 0) throw std::invalid_argument("gradient_variance: circuit has no parameters");
  const Program program(ansatz);
  const Observable observable(obs, ansatz.n_system);
  GradientVarianceResult r;
  r.n_samples = n_samples;
  r.samples.resize(n_samples);
  parallel_for(n_samples, threads, [&](std::size_t i) {
    const auto p = sample_parameters(ansatz.n_params, seed, i);
    r.samples[i] = program.parameter_shift_component(p, observable, 0);
  });
  r.variance = sample_variance(r.samples, &r.mean);
  r.variance_sigma = bootstrap_sigma(r.samples, bootstrap, seed,
                                     [](std::span<const Real> s) { return sample_variance(s); });
  return r;
}

PauliOperator default_gradient_observable() {
  return PauliOperator::term(1.0, PauliString{{0, Axis::Z}, {1, Axis::Z}});
}

Real purity(const DensityMatrix& rho) {
  // tr(ρ²) = Σ |ρ_ij|² for Hermitian ρ.
  return rho.matrix().squaredNorm();
}

}  // namespace haa
