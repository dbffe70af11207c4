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

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "haa/exact.hpp"

namespace haa {

bool SectorConstraint::admits(BasisIndex b) const {
  if (electron_count && std::popcount(b) != *electron_count) return false;
  if (sz) {
    const BasisIndex alpha = 0x5555555555555555ull;
    const int twice = std::popcount(b & alpha) - std::popcount(b & ~alpha);
    if (std::abs(0.5 * twice - *sz) > 1e-9) return false;
  }
  return true;
}

std::vector<BasisIndex> SectorConstraint::basis(std::size_t n_qubits) const {
  std::vector<BasisIndex> out;
  for (BasisIndex b = 0; b < dimension_of(n_qubits); ++b) {
    if (admits(b)) out.push_back(b);
  }
  return out;
}

Eigenpair lanczos_lowest(const SparseMatrixXc& h, Real tol, std::size_t max_krylov,
                         std::size_t max_restarts) {
  const Eigen::Index n = h.rows();
  if (n == 0) throw std::runtime_error("lanczos: empty matrix");
  Eigenpair out;
  if (n == 1) {
    out.value = h.coeff(0, 0).real();
    out.vector = VectorXc::Ones(1);
    return out;
  }
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<Real> normal;
  VectorXc start(n);
  for (Eigen::Index i = 0; i < n; ++i) start[i] = Complex(normal(rng), normal(rng));
  start.normalize();

  const auto k_max = static_cast<Eigen::Index>(std::min<std::size_t>(max_krylov, static_cast<std::size_t>(n)));
  for (std::size_t restart = 0; restart <= max_restarts; ++restart) {
    MatrixXc v(n, k_max);
    VectorXr alpha(k_max), beta(k_max);
    v.col(0) = start;
    Eigen::Index k = 0;
    for (; k < k_max; ++k) {
      VectorXc w = h * v.col(k);
      alpha[k] = v.col(k).dot(w).real();
      // Two passes of Gram–Schmidt keep the basis orthogonal to rounding.
      for (int pass = 0; pass < 2; ++pass) w -= v.leftCols(k + 1) * (v.leftCols(k + 1).adjoint() * w);
      beta[k] = w.norm();
      ++out.iterations;
      if (k + 1 == k_max || beta[k] < 1e-13) {
        ++k;
        break;
      }
      v.col(k + 1) = w / beta[k];
    }
    MatrixXr t = MatrixXr::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<MatrixXr> es(t);
    const VectorXr s = es.eigenvectors().col(0);
    VectorXc ritz = v.leftCols(k) * s.cast<Complex>();
    ritz.normalize();
    out.value = es.eigenvalues()[0];
    out.vector = ritz;
    out.residual = (h * ritz - out.value * ritz).norm();
    if (out.residual < tol) return out;
    start = ritz;
  }
  return out;
}

GroundState ground_state(const PauliOperator& op, std::size_t n_qubits,
                         const SectorConstraint& sector) {
  const PauliOperator simplified = simplify(op);
  if (!simplified.is_hermitian()) throw std::domain_error("ground_state: non-Hermitian operator");
  const SparseMatrixXc full = to_matrix(simplified, n_qubits);
  const std::vector<BasisIndex> basis = sector.basis(n_qubits);
  if (basis.empty()) throw std::runtime_error("ground_state: sector admits no basis state");

  SparseMatrixXc h;
  if (sector.unconstrained()) {
    h = full;
  } else {
    std::vector<Eigen::Index> position(dimension_of(n_qubits), -1);
    for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = static_cast<Eigen::Index>(i);
    std::vector<Eigen::Triplet<Complex>> t;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (SparseMatrixXc::InnerIterator it(full, static_cast<Eigen::Index>(basis[i])); it; ++it) {
        const Eigen::Index j = position[static_cast<std::size_t>(it.col())];
        if (j >= 0) t.emplace_back(static_cast<Eigen::Index>(i), j, it.value());
      }
    }
    const auto m = static_cast<Eigen::Index>(basis.size());
    h.resize(m, m);
    h.setFromTriplets(t.begin(), t.end());
  }

  const Eigenpair pair = lanczos_lowest(h);
  if (pair.residual >= 1e-10) {
    throw std::runtime_error("ground_state: Lanczos residual " + std::to_string(pair.residual));
  }
  GroundState out;
  out.energy = pair.value;
  out.residual = pair.residual;
  out.iterations = pair.iterations;
  VectorXc amps = VectorXc::Zero(static_cast<Eigen::Index>(dimension_of(n_qubits)));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    amps[static_cast<Eigen::Index>(basis[i])] = pair.vector[static_cast<Eigen::Index>(i)];
  }
  out.state = StateVector(n_qubits, std::move(amps));
  return out;
}

}  // namespace haa
