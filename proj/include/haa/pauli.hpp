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

#ifndef HAA_PAULI_HPP
#define HAA_PAULI_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "haa/types.hpp"

namespace haa {

enum class Axis : std::uint8_t { X = 1, Y = 2, Z = 3 };

char axis_letter(Axis a);

/**
 * Tensor product of single-qubit Pauli factors, stored sparsely.
 *
 * Factors are kept sorted by qubit index; identity factors are never stored,
 * so the empty string is the identity. Ordering is lexicographic over the
 * (qubit, axis) factor list, which fixes the term order of simplified
 * operators.
 */
class PauliString {
 public:
  typedef std::pair<std::uint32_t, Axis> Factor;

  PauliString() = default;
  /// Throws std::invalid_argument when a qubit index is repeated.
  PauliString(std::initializer_list<Factor> factors);
  explicit PauliString(std::vector<Factor> factors);

  static PauliString single(std::uint32_t qubit, Axis axis);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }
  std::size_t weight() const { return factors_.size(); }
  std::optional<Axis> at(std::uint32_t qubit) const;

  /// One past the highest qubit index touched (0 for the identity).
  std::size_t span() const;

  /// Bit masks for the symplectic form P ~ X^x Z^z (Y sets both bits).
  BasisIndex x_mask() const;
  BasisIndex z_mask() const;
  int y_count() const;

  /// "X0 Z3"; the identity renders as an empty string.
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b);

 private:
  std::vector<Factor> factors_;
};

/// matrix(a)·matrix(b) = phase·matrix(product), phase ∈ {±1, ±i}.
std::pair<Complex, PauliString> pauli_multiply(const PauliString& a,
                                               const PauliString& b);

struct PauliTerm {
  Complex coefficient;
  PauliString string;
};

/// Weighted sum of Pauli strings. Terms are kept as inserted until
/// `simplify` is applied.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::vector<PauliTerm> terms)
      : terms_(std::move(terms)) {}

  static PauliOperator identity(Complex coefficient = 1.0);
  static PauliOperator term(Complex coefficient, PauliString string);

  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add_term(Complex coefficient, PauliString string);

  /// Qubit count needed to host every term.
  std::size_t span() const;

  /// True iff every simplified coefficient is real within `tol`.
  bool is_hermitian(Real tol = 1e-10) const;

  /// One term per line, `(-0.5+0j) Z0 X3`, in stored order.
  std::string render() const;

  PauliOperator& operator+=(const PauliOperator& other);
  PauliOperator& operator-=(const PauliOperator& other);
  PauliOperator& operator*=(Complex scale);

  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) {
    return a += b;
  }
  friend PauliOperator operator-(PauliOperator a, const PauliOperator& b) {
    return a -= b;
  }
  friend PauliOperator operator*(PauliOperator a, Complex s) { return a *= s; }
  friend PauliOperator operator*(Complex s, PauliOperator a) { return a *= s; }
  /// Operator product, simplified.
  friend PauliOperator operator*(const PauliOperator& a,
                                 const PauliOperator& b);

 private:
  std::vector<PauliTerm> terms_;
};

inline constexpr Real kPruneTolerance = 1e-12;

/// Merges equal strings, drops |c| < tol, sorts strings lexicographically.
PauliOperator simplify(const PauliOperator& op, Real tol = kPruneTolerance);

/// [a, b] = ab - ba, simplified.
PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);

/// Python-style complex literal, e.g. "(-0.5+0j)"; shortest round-trip digits.
std::string format_complex(Complex c);

}  // namespace haa

#endif  // HAA_PAULI_HPP
