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

#include "haa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace haa::opt {

namespace {

bool finite(Real v) { return std::isfinite(v); }

// Tracks the patience window on accepted values.
bool stalled(const std::vector<Real>& trace, const Options& o) {
  if (trace.size() <= o.patience) return false;
  return std::abs(trace.back() - trace[trace.size() - 1 - o.patience]) < o.energy_change_tol;
}

// Minimizer of the cubic interpolating (a, fa, ga) and (b, fb, gb),
// safeguarded into the interior of [min(a,b), max(a,b)].
Real cubic_step(Real a, Real fa, Real ga, Real b, Real fb, Real gb) {
  const Real d1 = ga + gb - 3 * (fa - fb) / (a - b);
  const Real disc = d1 * d1 - ga * gb;
  const Real lo = std::min(a, b), hi = std::max(a, b);
  if (disc >= 0) {
    const Real d2 = std::copysign(std::sqrt(disc), b - a);
    const Real t = b - (b - a) * (gb + d2 - d1) / (gb - ga + 2 * d2);
    if (std::isfinite(t) && t > lo + 0.1 * (hi - lo) && t < hi - 0.1 * (hi - lo)) return t;
  }
  return 0.5 * (a + b);
}

struct LinePoint {
  Real step = 0.0;
  Real value = 0.0;
  Real slope = 0.0;
  VectorXr x;
  VectorXr grad;
};

// Strong-Wolfe search along d from (x, f0, g0·d).
bool wolfe_search(const Objective& f, const VectorXr& x, Real f0, Real slope0,
                  const VectorXr& d, Real initial, LinePoint& out, bool& nonfinite) {
  constexpr Real c1 = 1e-4, c2 = 0.9;
  constexpr int kMaxEvals = 30;
  auto eval = [&](Real a) {
    LinePoint p;
    p.step = a;
    p.x = x + a * d;
    p.grad.resize(x.size());
    p.value = f(p.x, p.grad);
    p.slope = p.grad.dot(d);
    return p;
  };
  auto zoom = [&](LinePoint lo, LinePoint hi, int evals) {
    for (; evals < kMaxEvals; ++evals) {
      const Real a = cubic_step(lo.step, lo.value, lo.slope, hi.step, hi.value, hi.slope);
      LinePoint p = eval(a);
      if (!finite(p.value)) {
        nonfinite = true;
        return false;
      }
      if (p.value > f0 + c1 * a * slope0 || p.value >= lo.value) {
        hi = std::move(p);
      } else {
        if (std::abs(p.slope) <= -c2 * slope0) {
          out = std::move(p);
          return true;
        }
        if (p.slope * (hi.step - lo.step) >= 0) hi = lo;
        lo = std::move(p);
      }
      if (std::abs(hi.step - lo.step) < 1e-16 * std::max<Real>(1.0, lo.step)) break;
    }
    // Accept a point with sufficient decrease even if curvature failed.
    if (lo.step > 0 && lo.value < f0) {
      out = std::move(lo);
      return true;
    }
    return false;
  };

  LinePoint prev;
  prev.step = 0.0;
  prev.value = f0;
  prev.slope = slope0;
  prev.x = x;
  Real a = initial;
  for (int evals = 0; evals < kMaxEvals; ++evals) {
    LinePoint p = eval(a);
    if (!finite(p.value)) {
      nonfinite = true;
      return false;
    }
    if (p.value > f0 + c1 * a * slope0 || (evals > 0 && p.value >= prev.value)) {
      return zoom(std::move(prev), std::move(p), evals + 1);
    }
    if (std::abs(p.slope) <= -c2 * slope0) {
      out = std::move(p);
      return true;
    }
    if (p.slope >= 0) return zoom(std::move(p), std::move(prev), evals + 1);
    prev = std::move(p);
    a *= 2.0;
  }
  return false;
}

}  // namespace

Outcome lbfgs(const Objective& f, VectorXr x0, const Options& o) {
  Outcome out;
  const Eigen::Index n = x0.size();
  VectorXr g(n);
  Real fx = f(x0, g);
  out.x = std::move(x0);
  out.value = fx;
  out.trace.push_back(fx);
  if (!finite(fx)) {
    out.failed = true;
    out.status = "non-finite loss";
    return out;
  }
  std::deque<VectorXr> s_hist, y_hist;
  std::deque<Real> rho_hist;
  bool fallback_used = false;
  for (out.iterations = 0; out.iterations < o.max_iterations;) {
    out.gradient_norm = g.norm();
    if (out.gradient_norm < o.gradient_norm_tol) {
      out.converged = true;
      out.status = "gradient norm";
      return out;
    }
    if (stalled(out.trace, o)) {
      out.converged = true;
      out.status = "energy change";
      return out;
    }
    // Two-loop recursion.
    VectorXr q = g;
    std::vector<Real> alpha(s_hist.size());
    for (std::size_t i = s_hist.size(); i-- > 0;) {
      alpha[i] = rho_hist[i] * s_hist[i].dot(q);
      q -= alpha[i] * y_hist[i];
    }
    Real gamma = 1.0;
    if (!s_hist.empty()) gamma = s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
    VectorXr d = gamma * q;
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const Real beta = rho_hist[i] * y_hist[i].dot(d);
      d += (alpha[i] - beta) * s_hist[i];
    }
    d = -d;
    Real slope = g.dot(d);
    if (!(slope < 0)) {
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      d = -g;
      slope = -g.squaredNorm();
    }
    const Real initial = s_hist.empty() ? std::min<Real>(1.0, 1.0 / g.norm()) : 1.0;
    LinePoint p;
    bool nonfinite = false;
    if (!wolfe_search(f, out.x, fx, slope, d, initial, p, nonfinite)) {
      if (nonfinite) {
        out.failed = true;
        out.status = "non-finite loss";
        return out;
      }
      if (fallback_used || s_hist.empty()) {
        out.status = "line search failed";
        return out;
      }
      fallback_used = true;
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      continue;
    }
    fallback_used = false;
    VectorXr s = p.x - out.x;
    VectorXr y = p.grad - g;
    const Real sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > o.memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    out.x = std::move(p.x);
    g = std::move(p.grad);
    fx = p.value;
    out.value = fx;
    out.trace.push_back(fx);
    ++out.iterations;
  }
  out.gradient_norm = g.norm();
  out.status = "iteration limit";
  return out;
}

Outcome adam(const Objective& f, VectorXr x0, const Options& o) {
  Outcome out;
  const Eigen::Index n = x0.size();
  VectorXr x = std::move(x0);
  VectorXr g(n), m = VectorXr::Zero(n), v = VectorXr::Zero(n);
  Real fx = f(x, g);
  out.x = x;
  out.value = fx;
  out.gradient_norm = g.norm();
  out.trace.push_back(fx);
  if (!finite(fx)) {
    out.failed = true;
    out.status = "non-finite loss";
    return out;
  }
  for (out.iterations = 0; out.iterations < o.max_iterations;) {
    if (g.norm() < o.gradient_norm_tol) {
      out.converged = true;
      out.status = "gradient norm";
      return out;
    }
    if (stalled(out.trace, o)) {
      out.converged = true;
      out.status = "energy change";
      return out;
    }
    ++out.iterations;
    const auto t = static_cast<Real>(out.iterations);
    m = o.beta1 * m + (1 - o.beta1) * g;
    v = o.beta2 * v + (1 - o.beta2) * g.cwiseAbs2();
    const Real c1 = 1 - std::pow(o.beta1, t), c2 = 1 - std::pow(o.beta2, t);
    x -= o.learning_rate * ((m / c1).array() / ((v / c2).array().sqrt() + o.epsilon)).matrix();
    fx = f(x, g);
    if (!finite(fx)) {
      out.failed = true;
      out.status = "non-finite loss";
      return out;
    }
    out.trace.push_back(fx);
    if (fx < out.value) {
      out.value = fx;
      out.x = x;
      out.gradient_norm = g.norm();
    }
  }
  out.status = "iteration limit";
  return out;
}

}  // namespace haa::opt
