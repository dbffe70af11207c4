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

#ifndef HAA_KERNELS_HPP
#define HAA_KERNELS_HPP

// In-place gate kernels over a little-endian amplitude array. Templated on
// the real scalar so single-precision runs are possible; the library
// instantiates them with double.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>

#include <Eigen/Core>

namespace haa::kernels {

typedef std::uint64_t Index;

/// i^k for k mod 4.
template <typename Scalar>
std::complex<Scalar> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

template <typename Scalar>
inline Scalar parity_sign(Index b, Index z) {
  return (std::popcount(b & z) & 1) ? Scalar(-1) : Scalar(1);
}

/// Inserts a zero bit at position `bit` of k.
inline Index insert_zero(Index k, int bit) {
  const Index low = k & ((Index{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

/**
 * ψ ← exp(−iθP/2) ψ for the Pauli string P = i^{ny} X^x Z^z, i.e.
 * P|b⟩ = i^{ny} (−1)^{|b∧z|} |b⊕x⟩.
 */
template <typename Scalar>
void apply_pauli_rotation(std::complex<Scalar>* psi, Index dim, Index x, Index z,
                          int ny, Scalar theta) {
  const Scalar c = std::cos(theta / 2), s = std::sin(theta / 2);
  if (x == 0) {
    const std::complex<Scalar> plus(c, -s), minus(c, s);
    for (Index b = 0; b < dim; ++b) psi[b] *= (std::popcount(b & z) & 1) ? minus : plus;
    return;
  }
  const std::complex<Scalar> ip = i_power<Scalar>(ny);
  const std::complex<Scalar> mis(0, -s);
  const int pivot = 63 - std::countl_zero(x);
  const Index half = dim >> 1;
  for (Index k = 0; k < half; ++k) {
    const Index b = insert_zero(k, pivot);
    const Index b2 = b ^ x;
    const std::complex<Scalar> pb = ip * parity_sign<Scalar>(b, z);
    const std::complex<Scalar> pb2 = ip * parity_sign<Scalar>(b2, z);
    const std::complex<Scalar> v = psi[b], v2 = psi[b2];
    psi[b] = c * v + mis * pb2 * v2;
    psi[b2] = c * v2 + mis * pb * v;
  }
}

/// ⟨lhs|P|rhs⟩.
template <typename Scalar>
std::complex<Scalar> pauli_inner(const std::complex<Scalar>* lhs,
                                 const std::complex<Scalar>* rhs, Index dim, Index x,
                                 Index z, int ny) {
  std::complex<Scalar> acc(0);
  for (Index b = 0; b < dim; ++b) {
    const std::complex<Scalar> t = std::conj(lhs[b ^ x]) * rhs[b];
    acc += (std::popcount(b & z) & 1) ? -t : t;
  }
  return acc * i_power<Scalar>(ny);
}

template <typename Scalar>
void apply_matrix1(std::complex<Scalar>* psi, Index dim, int q,
                   const Eigen::Matrix<std::complex<Scalar>, 2, 2>& m) {
  const Index mask = Index{1} << q;
  for (Index k = 0; k < (dim >> 1); ++k) {
    const Index b0 = insert_zero(k, q), b1 = b0 | mask;
    const std::complex<Scalar> v0 = psi[b0], v1 = psi[b1];
    psi[b0] = m(0, 0) * v0 + m(0, 1) * v1;
    psi[b1] = m(1, 0) * v0 + m(1, 1) * v1;
  }
}

template <typename Scalar>
void apply_cnot(std::complex<Scalar>* psi, Index dim, int control, int target) {
  const Index cm = Index{1} << control, tm = Index{1} << target;
  for (Index k = 0; k < (dim >> 1); ++k) {
    const Index b = insert_zero(k, target);
    if (b & cm) std::swap(psi[b], psi[b | tm]);
  }
}

template <typename Scalar>
void apply_cz(std::complex<Scalar>* psi, Index dim, int a, int b) {
  const Index m = (Index{1} << a) | (Index{1} << b);
  for (Index i = 0; i < dim; ++i) {
    if ((i & m) == m) psi[i] = -psi[i];
  }
}

/// Index with zero bits inserted at positions lo < hi.
inline Index insert_two_zeros(Index k, int lo, int hi) {
  return insert_zero(insert_zero(k, lo), hi);
}

/**
 * ψ ← exp(−i/2 (tx XX + ty YY + tz ZZ)) ψ on qubits (a, b). The generator
 * is block diagonal over the even {|00⟩, |11⟩} and odd {|01⟩, |10⟩}
 * parity pairs, where it acts as (tx ∓ ty)σx ± tz.
 */
template <typename Scalar>
void apply_can(std::complex<Scalar>* psi, Index dim, int a, int b, Scalar tx, Scalar ty,
               Scalar tz) {
  const int lo = a < b ? a : b, hi = a < b ? b : a;
  const Index ma = Index{1} << a, mb = Index{1} << b;
  const Scalar u = (tx - ty) / 2, v = (tx + ty) / 2;
  const std::complex<Scalar> even_phase = std::polar(Scalar(1), -tz / 2);
  const std::complex<Scalar> odd_phase = std::polar(Scalar(1), tz / 2);
  const std::complex<Scalar> ec = even_phase * std::cos(u);
  const std::complex<Scalar> es = even_phase * std::complex<Scalar>(0, -std::sin(u));
  const std::complex<Scalar> oc = odd_phase * std::cos(v);
  const std::complex<Scalar> os = odd_phase * std::complex<Scalar>(0, -std::sin(v));
  for (Index k = 0; k < (dim >> 2); ++k) {
    const Index i00 = insert_two_zeros(k, lo, hi);
    const Index i01 = i00 | ma, i10 = i00 | mb, i11 = i00 | ma | mb;
    const std::complex<Scalar> p00 = psi[i00], p11 = psi[i11];
    psi[i00] = ec * p00 + es * p11;
    psi[i11] = es * p00 + ec * p11;
    const std::complex<Scalar> p01 = psi[i01], p10 = psi[i10];
    psi[i01] = oc * p01 + os * p10;
    psi[i10] = os * p01 + oc * p10;
  }
}

/// (⟨lhs|XX|rhs⟩, ⟨lhs|YY|rhs⟩, ⟨lhs|ZZ|rhs⟩) on qubits (a, b) in one sweep.
template <typename Scalar>
void can_inner(const std::complex<Scalar>* lhs, const std::complex<Scalar>* rhs, Index dim,
               int a, int b, std::complex<Scalar> out[3]) {
  const int lo = a < b ? a : b, hi = a < b ? b : a;
  const Index ma = Index{1} << a, mb = Index{1} << b;
  std::complex<Scalar> even_flip(0), odd_flip(0), zz(0);
  for (Index k = 0; k < (dim >> 2); ++k) {
    const Index i00 = insert_two_zeros(k, lo, hi);
    const Index i01 = i00 | ma, i10 = i00 | mb, i11 = i00 | ma | mb;
    const std::complex<Scalar> l00 = std::conj(lhs[i00]), l01 = std::conj(lhs[i01]);
    const std::complex<Scalar> l10 = std::conj(lhs[i10]), l11 = std::conj(lhs[i11]);
    even_flip += l00 * rhs[i11] + l11 * rhs[i00];
    odd_flip += l01 * rhs[i10] + l10 * rhs[i01];
    zz += l00 * rhs[i00] - l01 * rhs[i01] - l10 * rhs[i10] + l11 * rhs[i11];
  }
  // YY|00⟩ = −|11⟩ and YY|01⟩ = |10⟩.
  out[0] = even_flip + odd_flip;
  out[1] = odd_flip - even_flip;
  out[2] = zz;
}

}  // namespace haa::kernels

#endif  // HAA_KERNELS_HPP
