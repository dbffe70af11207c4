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
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "haa/exact.hpp"
#include "haa/fcidump.hpp"
#include "haa/fermion.hpp"
#include "haa/hamiltonian.hpp"
#include "support/oracles.hpp"

namespace haa {
namespace {

const char* kMinimal =
    " &FCI NORB=1,NELEC=2,MS2=0,\n"
    "  ORBSYM=1,\n"
    "  ISYM=1,\n"
    " &END\n"
    " 0.5 1 1 1 1\n"
    " -1.0 1 1 0 0\n"
    " 0.1 0 0 0 0\n";

Real sector_ground(const MolecularHamiltonian& h) {
  SectorConstraint s;
  s.electron_count = h.integrals.n_elec;
  return ground_state(h.qubit_op, h.n_qubits, s).energy;
}

TEST(Fcidump, MinimalFile) {
  const auto ints = parse_fcidump_string(kMinimal);
  EXPECT_EQ(ints.n_orb, 1u);
  EXPECT_EQ(ints.n_elec, 2);
  EXPECT_EQ(ints.h(0, 0), -1.0);
  EXPECT_EQ(ints.eri_at(0, 0, 0, 0), 0.5);
  EXPECT_EQ(ints.e_core, 0.1);
}

TEST(Fcidump, SlashTerminatorAndZeroRecord) {
  const auto ints = parse_fcidump_string("&FCI NORB=2, NELEC=2, MS2=0 /\n 0.0 0 0 0 0\n");
  EXPECT_EQ(ints.e_core, 0.0);
  EXPECT_EQ(ints.h.norm(), 0.0);
  for (Real v : ints.eri) EXPECT_EQ(v, 0.0);
}

TEST(Fcidump, EightFoldSymmetry) {
  const auto ints = parse_fcidump_string("&FCI NORB=3, NELEC=2 /\n 0.25 1 2 3 1\n 0.7 2 1 0 0\n");
  const std::size_t p = 0, q = 1, r = 2, s = 0;
  for (auto [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s}, std::array{p, q, s, r},
                           std::array{q, p, s, r}, std::array{r, s, p, q}, std::array{s, r, p, q},
                           std::array{r, s, q, p}, std::array{s, r, q, p}}) {
    EXPECT_EQ(ints.eri_at(a, b, c, d), 0.25);
  }
  EXPECT_EQ(ints.h(0, 1), 0.7);
  EXPECT_EQ(ints.h(1, 0), 0.7);
  EXPECT_EQ(ints.eri_at(0, 0, 1, 1), 0.0);
}

TEST(Fcidump, Errors) {
  EXPECT_THROW(parse_fcidump_string("&FCI NELEC=2 /\n"), FcidumpError);
  EXPECT_THROW(parse_fcidump_string("&FCI NORB=1, NELEC=2 /\n 1.0 2 1 0 0\n"), FcidumpError);
  EXPECT_THROW(parse_fcidump_string("&FCI NORB=2, NELEC=2 /\n 1.0 1 2 0 0\n 1.5 2 1 0 0\n"), FcidumpError);
  EXPECT_NO_THROW(parse_fcidump_string("&FCI NORB=2, NELEC=2 /\n 1.0 1 2 0 0\n 1.0 2 1 0 0\n"));
  EXPECT_THROW(parse_fcidump_string("&FCI NORB=1, NELEC=2 /\n abc 1 1 0 0\n"), FcidumpError);
  EXPECT_THROW(read_fcidump("/nonexistent/file.fcidump"), FcidumpError);
}

TEST(Assemble, ConstantOnly) {
  auto ints = parse_fcidump_string("&FCI NORB=1, NELEC=0 /\n 0.5 0 0 0 0\n");
  const auto h = assemble(ints);
  EXPECT_EQ(h.n_qubits, 2u);
  ASSERT_EQ(h.qubit_op.size(), 1u);
  EXPECT_TRUE(h.qubit_op.terms()[0].string.is_identity());
  EXPECT_NEAR(h.qubit_op.terms()[0].coefficient.real(), 0.5, 1e-15);
}

TEST(Assemble, IndependentSpinOrbitals) {
  const auto h = assemble(parse_fcidump_string("&FCI NORB=1, NELEC=2 /\n -1.0 1 1 0 0\n"));
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(oracle::operator_dense(h.qubit_op, 2));
  const std::vector<Real> expected{-2, -1, -1, 0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(es.eigenvalues()(i), expected[static_cast<std::size_t>(i)], 1e-14);
}

TEST(Assemble, OneOrbitalRepulsionMatchesHandCount) {
  // Double occupancy costs 2h + (11|11).
  const auto h = assemble(parse_fcidump_string(kMinimal));
  const MatrixXc m = oracle::operator_dense(h.qubit_op, 2);
  EXPECT_NEAR(m(0, 0).real(), 0.1, 1e-14);
  EXPECT_NEAR(m(1, 1).real(), -0.9, 1e-14);
  EXPECT_NEAR(m(2, 2).real(), -0.9, 1e-14);
  EXPECT_NEAR(m(3, 3).real(), 0.1 - 2.0 + 0.5, 1e-14);
}

TEST(Assemble, H2MatchesExternalFci) {
  const auto refs = oracle::reference_energies();
  const auto h = assemble(read_fcidump(oracle::data_path("h2_0.7414.fcidump")));
  EXPECT_EQ(h.n_qubits, 4u);
  EXPECT_TRUE(h.qubit_op.is_hermitian());
  const Real e = sector_ground(h);
  EXPECT_NEAR(e, refs.at("h2_0.7414.fcidump"), 1e-8);
  EXPECT_NEAR(e, -1.137, 1e-3);
}

TEST(Assemble, FermionOperatorMatchesQubitOperator) {
  const auto h = assemble(read_fcidump(oracle::data_path("h2_0.7414.fcidump")));
  EXPECT_LT((oracle::fermion_dense(h.fermion_op, 4) - oracle::operator_dense(h.qubit_op, 4)).norm(), 1e-12);
}

TEST(Assemble, ScanAndChainsMatchExternalFci) {
  const auto refs = oracle::reference_energies();
  for (const auto& [name, e_ref] : refs) {
    const auto ints = read_fcidump(oracle::data_path(name));
    if (2 * ints.n_orb > 8) continue;
    EXPECT_NEAR(sector_ground(assemble(ints)), e_ref, 1e-8) << name;
  }
}

TEST(Assemble, ConservesNumberAndSz) {
  for (const char* name : {"h2_0.7414.fcidump", "h3p_chain.fcidump", "h4_chain.fcidump"}) {
    const auto h = assemble(read_fcidump(oracle::data_path(name)));
    const std::size_t n = h.n_qubits;
    const MatrixXc hm = MatrixXc(to_matrix(h.qubit_op, n));
    for (const auto& sym : {number_operator(n), sz_operator(n)}) {
      const MatrixXc s = MatrixXc(to_matrix(jordan_wigner(sym, n), n));
      EXPECT_LT((hm * s - s * hm).norm(), 1e-9) << name;
    }
  }
}

TEST(Assemble, OrbitalRelabelingKeepsGroundEnergy) {
  const auto ints = read_fcidump(oracle::data_path("h3p_chain.fcidump"));
  const Real e0 = sector_ground(assemble(ints));
  std::vector<std::size_t> perm(ints.n_orb);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    // Shuffle through the text form so the parser sees a relabeled file.
    const auto shuffled = parse_fcidump_string(render_fcidump(ints.permuted(perm)));
    EXPECT_NEAR(sector_ground(assemble(shuffled)), e0, 1e-9);
  }
}

TEST(Fcidump, RenderRoundTrip) {
  const auto ints = read_fcidump(oracle::data_path("h4_chain.fcidump"));
  const auto again = parse_fcidump_string(render_fcidump(assemble(ints).integrals));
  EXPECT_EQ(again.n_orb, ints.n_orb);
  EXPECT_EQ(again.n_elec, ints.n_elec);
  EXPECT_EQ(again.ms2, ints.ms2);
  EXPECT_NEAR(again.e_core, ints.e_core, 1e-12);
  EXPECT_LT((again.h - ints.h).cwiseAbs().maxCoeff(), 1e-12);
  for (std::size_t i = 0; i < ints.eri.size(); ++i) EXPECT_NEAR(again.eri[i], ints.eri[i], 1e-12);
}

}  // namespace
}  // namespace haa
