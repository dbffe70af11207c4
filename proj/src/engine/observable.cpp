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

#include "haa/observable.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "haa/kernels.hpp"
#include "haa/simulator.hpp"

namespace haa {

namespace {

constexpr Real kImaginaryResidue = 1e-10;

Real checked_real(Complex v) {
  if (std::abs(v.imag()) > kImaginaryResidue * std::max<Real>(1.0, std::abs(v))) {
    throw std::runtime_error("expectation: imaginary residue above tolerance");
  }
  return v.real();
}

}  // namespace

Observable::Observable(const PauliOperator& op, std::size_t n_qubits)
    : op_(simplify(op)), n_qubits_(n_qubits) {
  if (!op_.is_hermitian()) throw std::domain_error("Observable: operator is not Hermitian");
  if (op_.span() > n_qubits) {
    throw std::invalid_argument("Observable: operator support exceeds register");
  }
  if (n_qubits > 24) throw std::invalid_argument("Observable: register too wide");
  constant_ = std::all_of(op_.terms().begin(), op_.terms().end(),
                          [](const PauliTerm& t) { return t.string.is_identity(); });

  // Group strings by their X mask: each group contributes one permutation
  // b -> b ^ x scaled by a diagonal.
  std::map<BasisIndex, std::vector<const PauliTerm*>> groups;
  for (const auto& t : op_.terms()) groups[t.string.x_mask()].push_back(&t);

  const BasisIndex dim = dimension_of(n_qubits);
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(groups.size() * dim);
  for (const auto& [x, terms] : groups) {
    for (BasisIndex b = 0; b < dim; ++b) {
      Complex d = 0.0;
      for (const PauliTerm* t : terms) {
        const Real sign = kernels::parity_sign<Real>(b, t->string.z_mask());
        d += t->coefficient.real() * sign * kernels::i_power<Real>(t->string.y_count());
      }
      if (d != Complex(0.0)) {
        triplets.emplace_back(static_cast<int>(b ^ x), static_cast<int>(b), d);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(dim);
  matrix_.resize(n, n);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.makeCompressed();
}

VectorXc Observable::apply(const StateVector& psi) const {
  if (psi.n_qubits() < n_qubits_) throw std::invalid_argument("Observable: state too narrow");
  const auto rows = matrix_.rows();
  const auto cols = static_cast<Eigen::Index>(psi.dim()) / rows;
  VectorXc out(psi.amplitudes().size());
  Eigen::Map<const MatrixXc> in_m(psi.data(), rows, cols);
  Eigen::Map<MatrixXc> out_m(out.data(), rows, cols);
  out_m.noalias() = matrix_ * in_m;
  return out;
}

Real Observable::expectation(const StateVector& psi) const {
  const VectorXc h = apply(psi);
  return checked_real(psi.amplitudes().dot(h));
}

Real Observable::expectation(const DensityMatrix& rho) const {
  if (rho.n_qubits() < n_qubits_) throw std::invalid_argument("Observable: state too narrow");
  if (rho.n_qubits() > n_qubits_) {
    return expectation(reduce_to_low_qubits(rho, n_qubits_));
  }
  const MatrixXc& m = rho.matrix();
  Complex acc = 0.0;
  for (Eigen::Index i = 0; i < matrix_.outerSize(); ++i) {
    for (SparseMatrixXc::InnerIterator it(matrix_, i); it; ++it) {
      acc += it.value() * m(it.col(), i);
    }
  }
  return checked_real(acc);
}

}  // namespace haa
