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

#include "haa/vqe.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "haa/fermion.hpp"
#include "haa/parallel.hpp"

namespace haa {

namespace {

PauliOperator shifted_square(const PauliOperator& op, Real shift) {
  const PauliOperator centered = simplify(op - PauliOperator::identity(shift));
  return simplify(centered * centered);
}

PauliOperator total_operator(const LossSpec& spec, std::size_t n_system) {
  PauliOperator total = spec.hamiltonian;
  if (spec.lambda_number > 0) {
    total += spec.lambda_number *
             shifted_square(jordan_wigner(number_operator(n_system), n_system),
                            spec.target_electrons);
  }
  if (spec.lambda_spin > 0) {
    total += spec.lambda_spin *
             shifted_square(jordan_wigner(s2_operator(n_system), n_system),
                            spec.target_s * (spec.target_s + 1));
  }
  return simplify(total);
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

CompiledLoss::CompiledLoss(const LossSpec& spec, std::size_t n_system)
    : spec_(spec),
      total_(total_operator(spec, n_system), n_system),
      energy_(spec.hamiltonian, n_system) {
  if (spec.lambda_number < 0 || spec.lambda_spin < 0) {
    throw std::invalid_argument("loss: penalty weights must be non-negative");
  }
  if (spec.lambda_number > 0) {
    number_.emplace(shifted_square(jordan_wigner(number_operator(n_system), n_system),
                                   spec.target_electrons),
                    n_system);
  }
  if (spec.lambda_spin > 0) {
    spin_.emplace(shifted_square(jordan_wigner(s2_operator(n_system), n_system),
                                 spec.target_s * (spec.target_s + 1)),
                  n_system);
  }
}

Real loss(const Circuit& ansatz, std::span<const Real> params, const LossSpec& spec) {
  const CompiledLoss compiled(spec, ansatz.n_system);
  return Program(ansatz).energy(params, compiled.total());
}

void VqeConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("vqe: restarts must be at least 1");
  if (max_iterations < 1) throw std::invalid_argument("vqe: max_iterations must be at least 1");
  if (!(gradient_norm_tol > 0) || !(energy_change_tol > 0)) {
    throw std::invalid_argument("vqe: tolerances must be positive");
  }
  if (patience < 1) throw std::invalid_argument("vqe: patience must be at least 1");
  if (!(init_sigma > 0)) throw std::invalid_argument("vqe: init_sigma must be positive");
  if (!(learning_rate > 0)) throw std::invalid_argument("vqe: learning_rate must be positive");
}

VectorXr initial_parameters(std::size_t n_params, const VqeConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VectorXr x(static_cast<Eigen::Index>(n_params));
  if (cfg.init == InitDistribution::Uniform) {
    std::uniform_real_distribution<Real> u(0.0, 2 * kPi);
    for (auto& v : x) v = u(rng);
  } else {
    std::normal_distribution<Real> g(0.0, cfg.init_sigma);
    for (auto& v : x) v = g(rng);
  }
  return x;
}

VqeResult minimize(const Circuit& ansatz, const LossSpec& spec, const VqeConfig& cfg) {
  cfg.validate();
  const Program program(ansatz);
  const CompiledLoss compiled(spec, ansatz.n_system);
  OptimizerKind kind = cfg.optimizer;
  if (kind == OptimizerKind::Auto) kind = ansatz.channel ? OptimizerKind::Adam : OptimizerKind::LBFGS;

  opt::Options options;
  options.max_iterations = cfg.max_iterations;
  options.gradient_norm_tol = cfg.gradient_norm_tol;
  options.energy_change_tol = cfg.energy_change_tol;
  options.patience = cfg.patience;
  options.learning_rate = cfg.learning_rate;

  const opt::Objective objective = [&](const VectorXr& x, VectorXr& grad) -> Real {
    const std::span<const Real> p(x.data(), static_cast<std::size_t>(x.size()));
    if (ansatz.channel) {
      grad = program.parameter_shift(p, compiled.total());
      return program.energy(p, compiled.total());
    }
    EnergyGradient eg = program.adjoint(p, compiled.total());
    grad = std::move(eg.gradient);
    return eg.value;
  };

  auto run_restart = [&](std::size_t r) {
    RestartRecord rec;
    rec.seed = cfg.base_seed + r;
    rec.initial_params = initial_parameters(ansatz.n_params, cfg, rec.seed);
    opt::Outcome o;
    try {
      o = kind == OptimizerKind::Adam ? opt::adam(objective, rec.initial_params, options)
                                      : opt::lbfgs(objective, rec.initial_params, options);
    } catch (const std::exception& e) {
      o.failed = true;
      o.status = e.what();
      o.x = rec.initial_params;
    }
    rec.trace = std::move(o.trace);
    rec.params = std::move(o.x);
    rec.iterations = o.iterations;
    rec.converged = o.converged;
    rec.failed = o.failed || !std::isfinite(o.value);
    rec.status = std::move(o.status);
    rec.gradient_norm = o.gradient_norm;
    rec.final_loss = rec.failed ? std::numeric_limits<Real>::quiet_NaN() : o.value;
    rec.final_energy = std::numeric_limits<Real>::quiet_NaN();
    if (!rec.failed) {
      const std::span<const Real> p(rec.params.data(), static_cast<std::size_t>(rec.params.size()));
      rec.final_energy = program.energy(p, compiled.energy());
    }
    return rec;
  };

  VqeResult result;
  const std::size_t batch = std::max<std::size_t>(1, cfg.threads);
  for (std::size_t start = 0; start < cfg.restarts; start += batch) {
    const std::size_t count = std::min(batch, cfg.restarts - start);
    std::vector<RestartRecord> records(count);
    parallel_for(count, cfg.threads, [&](std::size_t i) { records[i] = run_restart(start + i); });
    bool hit = false;
    for (auto& rec : records) {
      const bool success = cfg.stop_at_loss && !rec.failed && rec.final_loss <= *cfg.stop_at_loss;
      result.restarts.push_back(std::move(rec));
      if (success) {
        hit = true;
        break;
      }
    }
    if (hit) {
      result.stopped_early = result.restarts.size() < cfg.restarts;
      break;
    }
  }

  result.all_failed = true;
  Real best = std::numeric_limits<Real>::infinity();
  for (std::size_t r = 0; r < result.restarts.size(); ++r) {
    const auto& rec = result.restarts[r];
    if (rec.failed) continue;
    result.all_failed = false;
    if (rec.final_loss < best) {
      best = rec.final_loss;
      result.best_restart = r;
    }
  }
  if (result.all_failed) {
    result.best_energy = result.best_loss = std::numeric_limits<Real>::quiet_NaN();
    return result;
  }
  const auto& winner = result.restarts[result.best_restart];
  result.best_loss = winner.final_loss;
  result.best_energy = winner.final_energy;
  result.best_params = winner.params;
  result.final_gradient_norm = winner.gradient_norm;
  std::size_t finished = 0, in_basin = 0;
  for (const auto& rec : result.restarts) {
    if (rec.failed) continue;
    ++finished;
    if (rec.final_loss - best <= 1e-6) ++in_basin;
  }
  result.basin_fraction = static_cast<Real>(in_basin) / static_cast<Real>(finished);
  return result;
}

std::string_view optimizer_name(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::Auto:
      return "auto";
    case OptimizerKind::LBFGS:
      return "lbfgs";
    case OptimizerKind::Adam:
      return "adam";
  }
  return "?";
}

OptimizerKind parse_optimizer(std::string_view s) {
  const std::string v = lower(s);
  if (v == "auto") return OptimizerKind::Auto;
  if (v == "lbfgs" || v == "l-bfgs") return OptimizerKind::LBFGS;
  if (v == "adam") return OptimizerKind::Adam;
  throw std::invalid_argument("unknown optimizer '" + std::string(s) + "'");
}

std::string_view init_name(InitDistribution d) {
  return d == InitDistribution::Uniform ? "uniform" : "gaussian";
}

InitDistribution parse_init(std::string_view s) {
  const std::string v = lower(s);
  if (v == "uniform") return InitDistribution::Uniform;
  if (v == "gaussian" || v == "normal") return InitDistribution::Gaussian;
  throw std::invalid_argument("unknown init distribution '" + std::string(s) + "'");
}

}  // namespace haa
