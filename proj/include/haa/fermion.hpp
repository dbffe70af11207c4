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

#ifndef HAA_FERMION_HPP
#define HAA_FERMION_HPP

#include <cstdint>
#include <vector>

#include "haa/pauli.hpp"
#include "haa/types.hpp"

namespace haa {

struct Ladder {
  std::uint32_t mode;
  bool creation;
  friend bool operator==(const Ladder&, const Ladder&) = default;
};

inline Ladder create(std::uint32_t mode) { return {mode, true}; }
inline Ladder annihilate(std::uint32_t mode) { return {mode, false}; }

struct FermionTerm {
  Complex coefficient;
  std::vector<Ladder> ladders;  // applied right to left, as written
};

/// Linear combination of ladder-operator products. No normal ordering is
/// ever applied; ladder sequences are kept exactly as inserted.
class FermionOperator {
 public:
  FermionOperator() = default;

  static FermionOperator identity(Complex coefficient = 1.0);
  static FermionOperator term(Complex coefficient, std::vector<Ladder> ladders);

  const std::vector<FermionTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(Complex coefficient, std::vector<Ladder> ladders);

  /// One past the highest mode index (0 when only constants are present).
  std::size_t span() const;

  /// Hermitian conjugate: reversed ladder order, flipped flags, conj coeffs.
  FermionOperator adjoint() const;

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator*=(Complex scale);

  friend FermionOperator operator+(FermionOperator a,
                                   const FermionOperator& b) {
    return a += b;
  }
  friend FermionOperator operator*(FermionOperator a, Complex s) {
    return a *= s;
  }
  friend FermionOperator operator*(Complex s, FermionOperator a) {
    return a *= s;
  }
  /// Product by concatenation of ladder sequences.
  friend FermionOperator operator*(const FermionOperator& a,
                                   const FermionOperator& b);

 private:
  std::vector<FermionTerm> terms_;
};

/// Σ_j a_j† a_j.
FermionOperator number_operator(std::size_t n_modes);

/// ½ Σ_p (n_pα − n_pβ) with α on even modes; n_modes must be even.
FermionOperator sz_operator(std::size_t n_modes);

/// Ŝ₋Ŝ₊ + Ŝz(Ŝz + 1); n_modes must be even.
FermionOperator s2_operator(std::size_t n_modes);

/// Jordan–Wigner image, simplified:
///   a_j† ↦ ½(X_j − iY_j) Z_{j−1}⋯Z_0,  a_j ↦ ½(X_j + iY_j) Z_{j−1}⋯Z_0.
/// Throws std::out_of_range when a mode index is ≥ n_modes.
PauliOperator jordan_wigner(const FermionOperator& op, std::size_t n_modes);

}  // namespace haa

#endif  // HAA_FERMION_HPP
