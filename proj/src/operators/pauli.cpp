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

#include "haa/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace haa {

char axis_letter(Axis a) {
  switch (a) {
    case Axis::X:
      return 'X';
    case Axis::Y:
      return 'Y';
    case Axis::Z:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::initializer_list<Factor> factors)
    : PauliString(std::vector<Factor>(factors)) {}

PauliString::PauliString(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factors_[i].first == factors_[i - 1].first) {
      throw std::invalid_argument("PauliString: qubit " +
                                  std::to_string(factors_[i].first) +
                                  " appears twice");
    }
  }
}

PauliString PauliString::single(std::uint32_t qubit, Axis axis) {
  PauliString s;
  s.factors_.emplace_back(qubit, axis);
  return s;
}

std::optional<Axis> PauliString::at(std::uint32_t qubit) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), qubit,
      [](const Factor& f, std::uint32_t q) { return f.first < q; });
  if (it == factors_.end() || it->first != qubit) return std::nullopt;
  return it->second;
}

std::size_t PauliString::span() const {
  return factors_.empty() ? 0 : std::size_t{factors_.back().first} + 1;
}

namespace {

BasisIndex bit_for(std::uint32_t qubit) {
  if (qubit >= 64) {
    throw std::out_of_range("PauliString: mask form limited to 64 qubits");
  }
  return BasisIndex{1} << qubit;
}

}  // namespace

BasisIndex PauliString::x_mask() const {
  BasisIndex m = 0;
  for (const auto& [q, a] : factors_) {
    if (a != Axis::Z) m |= bit_for(q);
  }
  return m;
}

BasisIndex PauliString::z_mask() const {
  BasisIndex m = 0;
  for (const auto& [q, a] : factors_) {
    if (a != Axis::X) m |= bit_for(q);
  }
  return m;
}

int PauliString::y_count() const {
  return static_cast<int>(std::count_if(
      factors_.begin(), factors_.end(),
      [](const Factor& f) { return f.second == Axis::Y; }));
}

std::string PauliString::to_string() const {
  std::string out;
  for (const auto& [q, a] : factors_) {
    if (!out.empty()) out += ' ';
    out += axis_letter(a);
    out += std::to_string(q);
  }
  return out;
}

std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
  return std::lexicographical_compare_three_way(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
      b.factors_.end());
}

std::pair<Complex, PauliString> pauli_multiply(const PauliString& a,
                                               const PauliString& b) {
  static const Complex kI(0.0, 1.0);
  Complex phase = 1.0;
  std::vector<PauliString::Factor> out;
  out.reserve(a.weight() + b.weight());
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  while (ia != a.factors().end() || ib != b.factors().end()) {
    if (ib == b.factors().end() ||
        (ia != a.factors().end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.factors().end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      const int x = static_cast<int>(ia->second);
      const int y = static_cast<int>(ib->second);
      if (x != y) {
        // X·Y = iZ and cyclic; reversed order picks up -i.
        phase *= ((y - x + 3) % 3 == 1) ? kI : -kI;
        out.emplace_back(ia->first, static_cast<Axis>(6 - x - y));
      }
      ++ia;
      ++ib;
    }
  }
  PauliString product;
  product = PauliString(std::move(out));
  return {phase, std::move(product)};
}

PauliOperator PauliOperator::identity(Complex coefficient) {
  return term(coefficient, PauliString{});
}

PauliOperator PauliOperator::term(Complex coefficient, PauliString string) {
  PauliOperator op;
  op.add_term(coefficient, std::move(string));
  return op;
}

void PauliOperator::add_term(Complex coefficient, PauliString string) {
  terms_.push_back({coefficient, std::move(string)});
}

std::size_t PauliOperator::span() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n = std::max(n, t.string.span());
  return n;
}

bool PauliOperator::is_hermitian(Real tol) const {
  const PauliOperator s = simplify(*this);
  return std::all_of(s.terms_.begin(), s.terms_.end(), [tol](const auto& t) {
    return std::abs(t.coefficient.imag()) <= tol;
  });
}

std::string PauliOperator::render() const {
  std::string out;
  for (const auto& t : terms_) {
    out += format_complex(t.coefficient);
    if (!t.string.is_identity()) {
      out += ' ';
      out += t.string.to_string();
    }
    out += '\n';
  }
  return out;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& other) {
  terms_.reserve(terms_.size() + other.terms_.size());
  for (const auto& t : other.terms_) terms_.push_back({-t.coefficient, t.string});
  return *this;
}

PauliOperator& PauliOperator::operator*=(Complex scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  std::map<PauliString, Complex> acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      auto [phase, s] = pauli_multiply(ta.string, tb.string);
      acc[std::move(s)] += phase * ta.coefficient * tb.coefficient;
    }
  }
  PauliOperator out;
  for (auto& [s, c] : acc) {
    if (std::abs(c) >= kPruneTolerance) out.add_term(c, s);
  }
  return out;
}

PauliOperator simplify(const PauliOperator& op, Real tol) {
  std::map<PauliString, Complex> acc;
  for (const auto& t : op.terms()) acc[t.string] += t.coefficient;
  PauliOperator out;
  for (auto& [s, c] : acc) {
    if (std::abs(c) >= tol) out.add_term(c, s);
  }
  return out;
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  return simplify(a * b - b * a);
}

namespace {

std::string shortest(Real v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_complex(Complex c) {
  // Signed zeros print as plain zeros.
  const Real re = c.real() == 0.0 ? 0.0 : c.real();
  const Real im = c.imag() == 0.0 ? 0.0 : c.imag();
  std::string out = "(" + shortest(re);
  out += std::signbit(im) ? "-" : "+";
  out += shortest(std::abs(im));
  out += "j)";
  return out;
}

}  // namespace haa
