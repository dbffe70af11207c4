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

#ifndef HAA_OPTIMIZE_HPP
#define HAA_OPTIMIZE_HPP

#include <functional>
#include <string>
#include <vector>

#include "haa/types.hpp"

namespace haa::opt {

/// Returns f(x) and writes ∇f(x) into `grad`.
typedef std::function<Real(const VectorXr& x, VectorXr& grad)> Objective;

struct Options {
  std::size_t max_iterations = 1000;
  Real gradient_norm_tol = 1e-8;
  /// Stop when f changed by less than this over the last `patience` steps.
  Real energy_change_tol = 1e-10;
  std::size_t patience = 10;
  // L-BFGS
  std::size_t memory = 10;
  // Adam
  Real learning_rate = 0.05;
  Real beta1 = 0.9;
  Real beta2 = 0.999;
  Real epsilon = 1e-8;
};

struct Outcome {
  VectorXr x;
  Real value = 0.0;
  Real gradient_norm = 0.0;
  std::vector<Real> trace;  // f at each accepted iterate, starting with x0
  std::size_t iterations = 0;
  bool converged = false;
  bool failed = false;  // non-finite value encountered
  std::string status;
};

/// Limited-memory BFGS with a strong-Wolfe line search (c1 = 1e-4,
/// c2 = 0.9). Falls back to steepest descent once when the line search
/// fails, then stops.
Outcome lbfgs(const Objective& f, VectorXr x0, const Options& options);

/// Adam; the returned point is the best iterate seen.
Outcome adam(const Objective& f, VectorXr x0, const Options& options);

}  // namespace haa::opt

#endif  // HAA_OPTIMIZE_HPP
