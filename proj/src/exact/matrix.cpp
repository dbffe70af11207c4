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

#include <stdexcept>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "haa/exact.hpp"
#include "haa/gates.hpp"

namespace haa {

namespace {

SparseMatrixXc pauli_factor(std::optional<Axis> axis) {
  typedef Eigen::Triplet<Complex> T;
  std::vector<T> t;
  if (!axis) {
    t = {T(0, 0, 1.0), T(1, 1, 1.0)};
  } else if (*axis == Axis::X) {
    t = {T(0, 1, 1.0), T(1, 0, 1.0)};
  } else if (*axis == Axis::Y) {
    t = {T(0, 1, Complex(0, -1)), T(1, 0, Complex(0, 1))};
  } else {
    t = {T(0, 0, 1.0), T(1, 1, -1.0)};
  }
  SparseMatrixXc m(2, 2);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace

SparseMatrixXc to_matrix(const PauliOperator& op, std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > kExactQubitLimit) {
    throw std::invalid_argument("to_matrix: register of " + std::to_string(n_qubits) +
                                " qubits outside [1, 16]");
  }
  if (op.span() > n_qubits) throw std::invalid_argument("to_matrix: support exceeds register");
  const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
  SparseMatrixXc out(d, d);
  for (const PauliTerm& term : op.terms()) {
    SparseMatrixXc m = pauli_factor(term.string.at(static_cast<std::uint32_t>(n_qubits - 1)));
    for (std::size_t q = n_qubits - 1; q-- > 0;) {
      SparseMatrixXc next = Eigen::kroneckerProduct(
          m, pauli_factor(term.string.at(static_cast<std::uint32_t>(q))));
      m = std::move(next);
    }
    out += term.coefficient * m;
  }
  out.prune(Complex(0.0), 0.0);
  return out;
}

MatrixXc embed(const MatrixXc& local, std::span<const std::size_t> targets,
               std::size_t n_qubits) {
  const std::size_t k = targets.size();
  if (local.rows() != static_cast<Eigen::Index>(dimension_of(k))) {
    throw std::invalid_argument("embed: matrix size does not match target count");
  }
  const BasisIndex dim = dimension_of(n_qubits);
  BasisIndex mask = 0;
  for (auto t : targets) mask |= BasisIndex{1} << t;
  MatrixXc out = MatrixXc::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  auto local_index = [&](BasisIndex b) {
    BasisIndex l = 0;
    for (std::size_t i = 0; i < k; ++i) l |= ((b >> targets[i]) & 1u) << i;
    return l;
  };
  auto scatter = [&](BasisIndex rest, BasisIndex l) {
    BasisIndex b = rest;
    for (std::size_t i = 0; i < k; ++i) b |= ((l >> i) & 1u) << targets[i];
    return b;
  };
  for (BasisIndex col = 0; col < dim; ++col) {
    const BasisIndex rest = col & ~mask;
    const BasisIndex lc = local_index(col);
    for (BasisIndex lr = 0; lr < dimension_of(k); ++lr) {
      out(static_cast<Eigen::Index>(scatter(rest, lr)), static_cast<Eigen::Index>(col)) =
          local(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
    }
  }
  return out;
}

MatrixXc circuit_unitary(const Circuit& c, std::span<const Real> params) {
  c.validate();
  if (c.channel) throw std::invalid_argument("circuit_unitary: channel circuit");
  if (c.width() > 10) throw std::invalid_argument("circuit_unitary: width above 10");
  if (params.size() != c.n_params) throw std::invalid_argument("circuit_unitary: params");
  const auto d = static_cast<Eigen::Index>(dimension_of(c.width()));
  MatrixXc u = MatrixXc::Identity(d, d);
  for (const Gate& g : c.gates) u = embed(gate_matrix(g, params), g.targets, c.width()) * u;
  return u;
}

}  // namespace haa
