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
#include <array>
#include <random>

#include <gtest/gtest.h>

#include "haa/ansatz.hpp"
#include "haa/decompose.hpp"
#include "haa/exact.hpp"
#include "haa/gates.hpp"
#include "support/oracles.hpp"

namespace haa {
namespace {

MatrixXc pauli_rot_oracle(const PauliString& p, std::size_t n, Real theta) {
  const MatrixXc m = oracle::pauli_dense(p, n);
  const auto d = m.rows();
  return std::cos(theta / 2) * MatrixXc::Identity(d, d) - Complex(0, std::sin(theta / 2)) * m;
}

AnsatzSpec spec_of(Family f, std::size_t sys, std::size_t anc, std::size_t layers,
                   GateCombo combo = GateCombo::CAN, Coupling coupling = Coupling::Cross) {
  AnsatzSpec s;
  s.family = f;
  s.n_system = sys;
  s.n_ancilla = anc;
  s.layers = layers;
  s.combo = combo;
  s.coupling = coupling;
  return s;
}

TEST(CanUnitary, ZeroIsIdentity) {
  EXPECT_LT((can_unitary(0, 0, 0) - Matrix4c::Identity()).norm(), 1e-15);
}

TEST(CanUnitary, SingleGeneratorIsPauliRotation) {
  const PauliString xx{{0, Axis::X}, {1, Axis::X}};
  for (Real t : {0.3, -1.7, 2.9}) {
    EXPECT_LT((MatrixXc(can_unitary(t, 0, 0)) - pauli_rot_oracle(xx, 2, t)).norm(), 1e-14);
  }
}

TEST(CanUnitary, EqualsProductOfCommutingRotations) {
  const PauliString xx{{0, Axis::X}, {1, Axis::X}}, yy{{0, Axis::Y}, {1, Axis::Y}},
      zz{{0, Axis::Z}, {1, Axis::Z}};
  std::mt19937_64 rng(2);
  std::vector<std::array<Real, 3>> cases{{kPi, kPi, kPi}};
  for (int i = 0; i < 10; ++i) {
    const auto a = oracle::random_angles(3, rng);
    cases.push_back({a[0], a[1], a[2]});
  }
  for (const auto& [tx, ty, tz] : cases) {
    const MatrixXc rx = pauli_rot_oracle(xx, 2, tx), ry = pauli_rot_oracle(yy, 2, ty),
                   rz = pauli_rot_oracle(zz, 2, tz);
    const MatrixXc u = MatrixXc(can_unitary(tx, ty, tz));
    EXPECT_LT((u - rx * ry * rz).norm(), 1e-13);
    EXPECT_LT((u - rz * rx * ry).norm(), 1e-13);
    EXPECT_LT((u - ry * rz * rx).norm(), 1e-13);
  }
}

TEST(Gates, U3IsRzRyRz) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const auto a = oracle::random_angles(3, rng);
    const Matrix2c lhs = u3_matrix(a[0], a[1], a[2]);
    const Matrix2c rhs = rz_matrix(a[1]) * ry_matrix(a[0]) * rz_matrix(a[2]);
    EXPECT_NEAR(oracle::phase_insensitive_overlap(lhs, rhs), 1.0, 1e-14);
  }
  const Matrix2c x_like = u3_matrix(kPi, 0, kPi);
  EXPECT_NEAR(std::abs(x_like(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(x_like(0, 0)), 0.0, 1e-15);
}

TEST(Gates, RotationsMatchPauliExponentials) {
  for (Real t : {0.4, 2.2}) {
    EXPECT_LT((MatrixXc(rx_matrix(t)) - pauli_rot_oracle(PauliString::single(0, Axis::X), 1, t)).norm(), 1e-15);
    EXPECT_LT((MatrixXc(ry_matrix(t)) - pauli_rot_oracle(PauliString::single(0, Axis::Y), 1, t)).norm(), 1e-15);
    EXPECT_LT((MatrixXc(rz_matrix(t)) - pauli_rot_oracle(PauliString::single(0, Axis::Z), 1, t)).norm(), 1e-15);
    // The matrix acts on the string's support only, in ascending qubit order.
    const PauliString p{{0, Axis::Y}, {2, Axis::X}}, compact{{0, Axis::Y}, {1, Axis::X}};
    EXPECT_LT((pauli_rotation_matrix(p, t) - pauli_rot_oracle(compact, 2, t)).norm(), 1e-14);
  }
}

TEST(BuildAnsatz, ReferenceParameterCounts) {
  EXPECT_EQ(build_ansatz(spec_of(Family::HEA, 8, 0, 25)).n_params, 600u);
  EXPECT_EQ(build_ansatz(spec_of(Family::HAA, 10, 1, 8)).n_params, 240u);
}

TEST(BuildAnsatz, SmallHaaLayout) {
  const auto c = build_ansatz(spec_of(Family::HAA, 2, 1, 1));
  ASSERT_EQ(c.gates.size(), 2u);
  EXPECT_EQ(c.n_params, 6u);
  EXPECT_EQ(c.gates[0].kind, GateKind::CAN);
  EXPECT_EQ(c.gates[0].targets, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(c.gates[1].targets, (std::vector<std::size_t>{1, 2}));
}

TEST(BuildAnsatz, CrossOrderIsAncillaMajor) {
  const auto c = build_ansatz(spec_of(Family::HAA, 2, 2, 1));
  const std::vector<std::vector<std::size_t>> expected{{0, 2}, {1, 2}, {0, 3}, {1, 3}};
  ASSERT_EQ(c.gates.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(c.gates[i].targets, expected[i]);
}

TEST(BuildAnsatz, HeaLayout) {
  const auto c = build_ansatz(spec_of(Family::HEA, 3, 0, 1));
  ASSERT_EQ(c.gates.size(), 5u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(c.gates[static_cast<std::size_t>(i)].kind, GateKind::U3);
  EXPECT_EQ(c.gates[3].kind, GateKind::CNOT);
  EXPECT_EQ(c.gates[3].targets, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.gates[4].targets, (std::vector<std::size_t>{1, 2}));
}

TEST(BuildAnsatz, ParameterFormulasHold) {
  for (std::size_t sys = 1; sys <= 12; ++sys) {
    for (std::size_t layers : {1u, 2u, 7u, 25u}) {
      EXPECT_EQ(parameter_count(spec_of(Family::HEA, sys, 0, layers)), 3 * sys * layers);
      for (std::size_t anc = 1; anc <= 4; ++anc) {
        const auto s = spec_of(Family::HAA, sys, anc, layers);
        EXPECT_EQ(parameter_count(s), 3 * sys * anc * layers);
        EXPECT_EQ(build_ansatz(s).n_params, 3 * sys * anc * layers);
      }
    }
  }
}

TEST(BuildAnsatz, EveryParameterSlotIsUsedOnce) {
  for (const auto& s : {spec_of(Family::HEA, 4, 0, 2), spec_of(Family::HAA, 4, 2, 2),
                        spec_of(Family::HAA, 3, 1, 2, GateCombo::U3CX, Coupling::Cross),
                        spec_of(Family::HAA, 3, 1, 2, GateCombo::U3CX, Coupling::Adjacent),
                        spec_of(Family::HAA, 4, 0, 2, GateCombo::CAN, Coupling::Adjacent)}) {
    const auto c = build_ansatz(s);
    std::vector<int> uses(c.n_params, 0);
    for (const auto& g : c.gates) {
      for (const auto& a : g.angles) {
        if (a.slot) ++uses[*a.slot];
      }
    }
    for (int u : uses) EXPECT_EQ(u, 1) << s.label();
  }
}

TEST(BuildAnsatz, QrqnnIsHaaWithResets) {
  for (std::size_t layers : {1u, 3u}) {
    const auto q = build_ansatz(spec_of(Family::QRQNN, 3, 2, layers));
    const auto h = build_ansatz(spec_of(Family::HAA, 3, 2, layers));
    EXPECT_TRUE(q.channel);
    EXPECT_FALSE(h.channel);
    std::size_t resets = 0;
    for (const auto& g : q.gates) resets += g.kind == GateKind::MeasureReset;
    EXPECT_EQ(resets, layers);
    const auto stripped = strip_measurements(q);
    ASSERT_EQ(stripped.gates.size(), h.gates.size());
    EXPECT_EQ(stripped.n_params, h.n_params);
    for (std::size_t i = 0; i < h.gates.size(); ++i) {
      EXPECT_EQ(stripped.gates[i].kind, h.gates[i].kind);
      EXPECT_EQ(stripped.gates[i].targets, h.gates[i].targets);
      ASSERT_EQ(stripped.gates[i].angles.size(), h.gates[i].angles.size());
      for (std::size_t k = 0; k < h.gates[i].angles.size(); ++k) {
        EXPECT_EQ(stripped.gates[i].angles[k].slot, h.gates[i].angles[k].slot);
      }
    }
  }
}

TEST(BuildAnsatz, RejectsInconsistentSpecs) {
  EXPECT_THROW(build_ansatz(spec_of(Family::HAA, 4, 0, 1)), std::invalid_argument);
  EXPECT_THROW(build_ansatz(spec_of(Family::HEA, 4, 1, 1)), std::invalid_argument);
  EXPECT_THROW(build_ansatz(spec_of(Family::HEA, 4, 0, 0)), std::invalid_argument);
  EXPECT_THROW(parse_family("xyz"), std::invalid_argument);
}

TEST(BuildAnsatz, ReferenceOccupationsAreLowestSpinOrbitals) {
  auto s = spec_of(Family::HAA, 4, 1, 1);
  s.n_electrons = 2;
  EXPECT_EQ(build_ansatz(s).reference_occupations, (std::vector<std::size_t>{0, 1}));
}

TEST(BuildAnsatz, UccsdSharesOneSlotPerSpatialExcitation) {
  AnsatzSpec s = spec_of(Family::UCCSD, 4, 0, 1);
  s.n_electrons = 2;
  const auto c = build_ansatz(s);
  // H₂ in a minimal basis: one single and one double spatial excitation.
  EXPECT_EQ(c.n_params, 2u);
  for (const auto& g : c.gates) EXPECT_EQ(g.kind, GateKind::PauliRot);
  EXPECT_GT(c.gates.size(), 2u);
}

TEST(BuildAnsatz, DenseUnitaryMatchesGateProduct) {
  std::mt19937_64 rng(8);
  for (const auto& s : {spec_of(Family::HAA, 2, 1, 2), spec_of(Family::HEA, 3, 0, 2),
                        spec_of(Family::HAA, 3, 1, 1, GateCombo::U3CX, Coupling::Cross)}) {
    const auto c = build_ansatz(s);
    const auto p = oracle::random_angles(c.n_params, rng);
    MatrixXc u = MatrixXc::Identity(1 << c.width(), 1 << c.width());
    for (const auto& g : c.gates) {
      const MatrixXc big = oracle::embed_dense(gate_matrix(g, p), g.targets, c.width());
      u = big * u;
    }
    EXPECT_LT((circuit_unitary(c, p) - u).norm(), 1e-12) << s.label();
  }
}

TEST(Decompose, CnotBecomesOneCzAndTwoHadamards) {
  Circuit c;
  c.n_system = 2;
  c.gates.push_back(Gate::cnot(0, 1));
  const auto d = decompose_to_cz(c);
  std::size_t cz = 0, h = 0;
  for (const auto& g : d.gates) {
    cz += g.kind == GateKind::CZ;
    h += g.kind == GateKind::H;
  }
  EXPECT_EQ(cz, 1u);
  EXPECT_EQ(h, 2u);
  EXPECT_NEAR(oracle::phase_insensitive_overlap(circuit_unitary(c, {}), circuit_unitary(d, {})), 1.0, 1e-12);
}

TEST(Decompose, CanUsesThreeCzAfterCancellation) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c;
    c.n_system = 2;
    c.n_params = 3;
    c.gates.push_back(Gate::can(0, 1, Angle::param(0), Angle::param(1), Angle::param(2)));
    const auto p = oracle::random_angles(3, rng);
    const auto d = decompose_to_cz(c);
    EXPECT_EQ(resource_report(c).n_cz_after_decomposition, 3u);
    for (const auto& g : d.gates) EXPECT_TRUE(g.kind == GateKind::CZ || g.targets.size() == 1);
    EXPECT_NEAR(oracle::phase_insensitive_overlap(circuit_unitary(c, p), circuit_unitary(d, p)), 1.0, 1e-12);
    const auto raw = decompose_to_cz(c, false);
    std::size_t cz = 0;
    for (const auto& g : raw.gates) cz += g.kind == GateKind::CZ;
    EXPECT_EQ(cz, 6u);
    EXPECT_NEAR(oracle::phase_insensitive_overlap(circuit_unitary(c, p), circuit_unitary(raw, p)), 1.0, 1e-12);
  }
}

TEST(Decompose, PreservesBuiltAnsatzUnitaries) {
  std::mt19937_64 rng(10);
  for (const auto& s : {spec_of(Family::HAA, 3, 1, 2), spec_of(Family::HEA, 4, 0, 2),
                        spec_of(Family::HAA, 2, 2, 1, GateCombo::U3CX, Coupling::Adjacent)}) {
    const auto c = build_ansatz(s);
    const auto p = oracle::random_angles(c.n_params, rng);
    EXPECT_NEAR(oracle::phase_insensitive_overlap(circuit_unitary(c, p), circuit_unitary(decompose_to_cz(c), p)),
                1.0, 1e-10)
        << s.label();
  }
  AnsatzSpec u = spec_of(Family::UCCSD, 4, 0, 1);
  u.n_electrons = 2;
  const auto c = build_ansatz(u);
  const auto p = oracle::random_angles(c.n_params, rng);
  EXPECT_NEAR(oracle::phase_insensitive_overlap(circuit_unitary(c, p), circuit_unitary(decompose_to_cz(c), p)),
              1.0, 1e-10);
}

TEST(Decompose, RejectsChannels) {
  EXPECT_THROW(decompose_to_cz(build_ansatz(spec_of(Family::QRQNN, 2, 1, 1))), std::invalid_argument);
}

TEST(ResourceReport, Counts) {
  const auto empty = resource_report(Circuit{});
  EXPECT_EQ(empty.n_params, 0u);
  EXPECT_EQ(empty.n_two_qubit_gates, 0u);
  EXPECT_EQ(empty.n_cz_after_decomposition, 0u);
  EXPECT_EQ(empty.depth, 0u);
  EXPECT_EQ(resource_report(build_ansatz(spec_of(Family::HEA, 8, 0, 25))).n_params, 600u);
  EXPECT_EQ(resource_report(build_ansatz(spec_of(Family::HAA, 8, 1, 8))).n_params, 192u);
  const auto r = resource_report(build_ansatz(spec_of(Family::HAA, 12, 2, 1)));
  EXPECT_EQ(r.n_params, 72u);
  EXPECT_EQ(r.n_two_qubit_gates, 24u);
  EXPECT_EQ(r.n_cz_after_decomposition, 72u);
  const auto one = resource_report(build_ansatz(spec_of(Family::HAA, 1, 1, 1)));
  EXPECT_EQ(one.n_params, 3u);
  EXPECT_EQ(one.n_two_qubit_gates, 1u);
  EXPECT_EQ(one.depth, 1u);
  // Every cross-coupled CAN of one layer shares the ancilla: depth = pairs.
  EXPECT_EQ(resource_report(build_ansatz(spec_of(Family::HAA, 4, 1, 2))).depth, 8u);
}

}  // namespace
}  // namespace haa
