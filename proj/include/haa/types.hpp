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

#ifndef HAA_TYPES_HPP
#define HAA_TYPES_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace haa {

typedef double Real;
typedef std::complex<Real> Complex;

typedef Eigen::Matrix<Complex, Eigen::Dynamic, 1> VectorXc;
typedef Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> MatrixXc;
typedef Eigen::Matrix<Complex, 2, 2> Matrix2c;
typedef Eigen::Matrix<Complex, 4, 4> Matrix4c;
typedef Eigen::Matrix<Real, Eigen::Dynamic, 1> VectorXr;
typedef Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> MatrixXr;
typedef Eigen::SparseMatrix<Complex, Eigen::RowMajor> SparseMatrixXc;

/// Basis-state index; bit q holds qubit q (little-endian).
typedef std::uint64_t BasisIndex;

inline constexpr Real kPi = 3.14159265358979323846;

/// 1 kcal/mol rounded up; every manifest echoes it.
inline constexpr Real kChemicalAccuracy = 1.6e-3;
inline constexpr Real kHartreeToKcalPerMol = 627.509474;

inline constexpr BasisIndex dimension_of(std::size_t n_qubits) {
  return BasisIndex{1} << n_qubits;
}

}  // namespace haa

#endif  // HAA_TYPES_HPP
