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
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "haa/exact.hpp"

namespace haa {

namespace {

std::string bitstring(BasisIndex b, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n; ++q) {
    if ((b >> q) & 1u) s[n - 1 - q] = '1';
  }
  return s;
}

}  // namespace

ConfigurationTable configuration_table(const StateVector& psi, const SectorConstraint& sector) {
  const VectorXc& a = psi.amplitudes();
  Eigen::Index top = 0;
  a.cwiseAbs().maxCoeff(&top);
  // Ties resolve to the lowest index so the phase choice is reproducible.
  const Real max_abs = std::abs(a[top]);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) >= max_abs - 1e-12) {
      top = i;
      break;
    }
  }
  const Complex phase = max_abs > 0 ? std::conj(a[top]) / max_abs : Complex(1.0);

  ConfigurationTable table;
  for (BasisIndex b = 0; b < psi.dim(); ++b) {
    const Complex c = phase * a[static_cast<Eigen::Index>(b)];
    if (sector.unconstrained()) {
      if (std::abs(c) <= 1e-12) continue;
    } else if (!sector.admits(b)) {
      continue;
    }
    table.max_imaginary = std::max(table.max_imaginary, std::abs(c.imag()));
    table.entries.push_back({b, bitstring(b, psi.n_qubits()), c.real()});
  }
  return table;
}

void write_configuration_csv(std::ostream& out, const ConfigurationTable& table) {
  out << "index,bitstring,coefficient\n";
  char buf[64];
  for (const auto& e : table.entries) {
    std::snprintf(buf, sizeof buf, "%.17g", e.coefficient);
    out << e.index << ',' << e.bitstring << ',' << buf << '\n';
  }
}

Real max_coefficient_deviation(const ConfigurationTable& a, const ConfigurationTable& b) {
  std::map<BasisIndex, std::pair<Real, Real>> merged;
  for (const auto& e : a.entries) merged[e.index].first = e.coefficient;
  for (const auto& e : b.entries) merged[e.index].second = e.coefficient;
  Real worst = 0.0;
  for (const auto& [index, pair] : merged) worst = std::max(worst, std::abs(pair.first - pair.second));
  return worst;
}

Real state_overlap(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("state_overlap: dimension mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

Real state_overlap(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.n_qubits() != psi.n_qubits()) throw std::invalid_argument("state_overlap: dimension mismatch");
  return psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
}

StateVector principal_state(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho.matrix());
  const Eigen::Index last = es.eigenvalues().size() - 1;
  return StateVector(rho.n_qubits(), es.eigenvectors().col(last));
}

}  // namespace haa
