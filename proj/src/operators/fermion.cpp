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

#include "haa/fermion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace haa {

FermionOperator FermionOperator::identity(Complex coefficient) {
  return term(coefficient, {});
}

FermionOperator FermionOperator::term(Complex coefficient,
                                      std::vector<Ladder> ladders) {
  FermionOperator op;
  op.add_term(coefficient, std::move(ladders));
  return op;
}

void FermionOperator::add_term(Complex coefficient,
                               std::vector<Ladder> ladders) {
  terms_.push_back({coefficient, std::move(ladders)});
}

std::size_t FermionOperator::span() const {
  std::size_t n = 0;
  for (const auto& t : terms_) {
    for (const auto& l : t.ladders) n = std::max<std::size_t>(n, l.mode + 1);
  }
  return n;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const auto& t : terms_) {
    std::vector<Ladder> rev(t.ladders.rbegin(), t.ladders.rend());
    for (auto& l : rev) l.creation = !l.creation;
    out.add_term(std::conj(t.coefficient), std::move(rev));
  }
  return out;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator*=(Complex scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator out;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      std::vector<Ladder> seq = ta.ladders;
      seq.insert(seq.end(), tb.ladders.begin(), tb.ladders.end());
      out.add_term(ta.coefficient * tb.coefficient, std::move(seq));
    }
  }
  return out;
}

FermionOperator number_operator(std::size_t n_modes) {
  if (n_modes < 1) throw std::invalid_argument("number_operator: n_modes < 1");
  FermionOperator n;
  for (std::uint32_t j = 0; j < n_modes; ++j) {
    n.add_term(1.0, {create(j), annihilate(j)});
  }
  return n;
}

namespace {

void require_even(std::size_t n_modes, const char* who) {
  if (n_modes == 0 || n_modes % 2 != 0) {
    throw std::invalid_argument(std::string(who) +
                                ": spin operators need an even, nonzero "
                                "number of modes");
  }
}

}  // namespace

FermionOperator sz_operator(std::size_t n_modes) {
  require_even(n_modes, "sz_operator");
  FermionOperator sz;
  for (std::uint32_t p = 0; p < n_modes; p += 2) {
    sz.add_term(0.5, {create(p), annihilate(p)});
    sz.add_term(-0.5, {create(p + 1), annihilate(p + 1)});
  }
  return sz;
}

FermionOperator s2_operator(std::size_t n_modes) {
  require_even(n_modes, "s2_operator");
  FermionOperator s_plus;
  FermionOperator s_minus;
  for (std::uint32_t p = 0; p < n_modes; p += 2) {
    s_plus.add_term(1.0, {create(p), annihilate(p + 1)});
    s_minus.add_term(1.0, {create(p + 1), annihilate(p)});
  }
  const FermionOperator sz = sz_operator(n_modes);
  return s_minus * s_plus + sz * sz + sz;
}

namespace {

// JW image of a single ladder operator: ½ X_j Z_{<j} ∓ (i/2) Y_j Z_{<j}.
std::pair<PauliString, PauliString> ladder_strings(std::uint32_t mode) {
  std::vector<PauliString::Factor> xs;
  xs.reserve(mode + 1);
  for (std::uint32_t q = 0; q < mode; ++q) xs.emplace_back(q, Axis::Z);
  std::vector<PauliString::Factor> ys = xs;
  xs.emplace_back(mode, Axis::X);
  ys.emplace_back(mode, Axis::Y);
  return {PauliString(std::move(xs)), PauliString(std::move(ys))};
}

}  // namespace

PauliOperator jordan_wigner(const FermionOperator& op, std::size_t n_modes) {
  std::vector<std::pair<PauliString, PauliString>> cache(n_modes);
  for (std::uint32_t j = 0; j < n_modes; ++j) cache[j] = ladder_strings(j);

  const Complex half_i(0.0, 0.5);
  std::map<PauliString, Complex> total;
  std::vector<std::pair<Complex, PauliString>> partial;
  std::vector<std::pair<Complex, PauliString>> next;
  for (const auto& t : op.terms()) {
    partial.assign(1, {t.coefficient, PauliString{}});
    for (const auto& l : t.ladders) {
      if (l.mode >= n_modes) {
        throw std::out_of_range("jordan_wigner: mode " +
                                std::to_string(l.mode) + " >= " +
                                std::to_string(n_modes));
      }
      const auto& [xs, ys] = cache[l.mode];
      const Complex ycoef = l.creation ? -half_i : half_i;
      next.clear();
      for (const auto& [c, s] : partial) {
        auto [px, sx] = pauli_multiply(s, xs);
        next.emplace_back(c * px * 0.5, std::move(sx));
        auto [py, sy] = pauli_multiply(s, ys);
        next.emplace_back(c * py * ycoef, std::move(sy));
      }
      // Merge duplicates so long ladder sequences stay small.
      std::map<PauliString, Complex> merged;
      for (auto& [c, s] : next) merged[std::move(s)] += c;
      partial.clear();
      for (auto& [s, c] : merged) {
        if (c != Complex(0.0)) partial.emplace_back(c, s);
      }
    }
    for (auto& [c, s] : partial) total[std::move(s)] += c;
  }
  PauliOperator out;
  for (auto& [s, c] : total) {
    if (std::abs(c) >= kPruneTolerance) out.add_term(c, s);
  }
  return out;
}

}  // namespace haa
