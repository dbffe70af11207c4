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

#include "haa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "haa/gates.hpp"
#include "haa/kernels.hpp"

namespace haa {

namespace {

using Op = Program::Op;

constexpr Real kShift = kPi / 2;

Op rotation(BasisIndex x, BasisIndex z, int ny, const Angle& a) {
  Op op;
  op.kind = Op::Kind::Rotation;
  op.x = x;
  op.z = z;
  op.ny = ny;
  op.angles[0] = a;
  return op;
}

Op axis_rotation(std::size_t q, Axis axis, const Angle& a) {
  const PauliString p = PauliString::single(static_cast<std::uint32_t>(q), axis);
  return rotation(p.x_mask(), p.z_mask(), p.y_count(), a);
}


std::vector<Op> lower(const Circuit& c) {
  std::vector<Op> ops;
  for (const Gate& g : c.gates) {
    const auto& t = g.targets;
    switch (g.kind) {
      case GateKind::U3:
        // RZ(φ)·RY(θ)·RZ(λ): λ acts first.
        ops.push_back(axis_rotation(t[0], Axis::Z, g.angles[2]));
        ops.push_back(axis_rotation(t[0], Axis::Y, g.angles[0]));
        ops.push_back(axis_rotation(t[0], Axis::Z, g.angles[1]));
        break;
      case GateKind::RX:
        ops.push_back(axis_rotation(t[0], Axis::X, g.angles[0]));
        break;
      case GateKind::RY:
        ops.push_back(axis_rotation(t[0], Axis::Y, g.angles[0]));
        break;
      case GateKind::RZ:
        ops.push_back(axis_rotation(t[0], Axis::Z, g.angles[0]));
        break;
      case GateKind::H: {
        Op op;
        op.kind = Op::Kind::Fixed1;
        op.q0 = static_cast<int>(t[0]);
        op.m = hadamard_matrix();
        ops.push_back(op);
        break;
      }
      case GateKind::CNOT:
      case GateKind::CZ: {
        Op op;
        op.kind = g.kind == GateKind::CNOT ? Op::Kind::Cnot : Op::Kind::Cz;
        op.q0 = static_cast<int>(t[0]);
        op.q1 = static_cast<int>(t[1]);
        ops.push_back(op);
        break;
      }
      case GateKind::CAN: {
        Op op;
        op.kind = Op::Kind::Can;
        op.q0 = static_cast<int>(t[0]);
        op.q1 = static_cast<int>(t[1]);
        op.angles = {g.angles[0], g.angles[1], g.angles[2]};
        ops.push_back(op);
        break;
      }
      case GateKind::PauliRot:
        ops.push_back(rotation(g.pauli.x_mask(), g.pauli.z_mask(), g.pauli.y_count(),
                               g.angles[0]));
        break;
      case GateKind::MeasureReset: {
        Op op;
        op.kind = Op::Kind::Reset;
        op.reset = t;
        ops.push_back(op);
        break;
      }
    }
  }
  return ops;
}

int angle_count(const Op& op) {
  if (op.kind == Op::Kind::Rotation) return 1;
  return op.kind == Op::Kind::Can ? 3 : 0;
}

void apply_op(const Op& op, const std::array<Real, 3>& a, Complex* psi, BasisIndex dim,
              bool inverse) {
  const Real sign = inverse ? -1.0 : 1.0;
  switch (op.kind) {
    case Op::Kind::Rotation:
      kernels::apply_pauli_rotation<Real>(psi, dim, op.x, op.z, op.ny, sign * a[0]);
      break;
    case Op::Kind::Can:
      kernels::apply_can<Real>(psi, dim, op.q0, op.q1, sign * a[0], sign * a[1], sign * a[2]);
      break;
    case Op::Kind::Fixed1:
      kernels::apply_matrix1<Real>(psi, dim, op.q0,
                                   inverse ? Matrix2c(op.m.adjoint()) : op.m);
      break;
    case Op::Kind::Cnot:
      kernels::apply_cnot<Real>(psi, dim, op.q0, op.q1);
      break;
    case Op::Kind::Cz:
      kernels::apply_cz<Real>(psi, dim, op.q0, op.q1);
      break;
    case Op::Kind::Reset:
      throw std::logic_error("reset applied to a pure state");
  }
}

// Non-selective measurement followed by reset to |0⟩ of one qubit.
void reset_qubit(MatrixXc& rho, std::size_t q) {
  const BasisIndex m = BasisIndex{1} << q;
  const auto d = static_cast<BasisIndex>(rho.rows());
  for (BasisIndex j = 0; j < d; ++j) {
    if (j & m) continue;
    for (BasisIndex i = 0; i < d; ++i) {
      if (i & m) continue;
      const auto I = static_cast<Eigen::Index>(i), J = static_cast<Eigen::Index>(j);
      const auto Im = static_cast<Eigen::Index>(i | m), Jm = static_cast<Eigen::Index>(j | m);
      rho(I, J) += rho(Im, Jm);
    }
  }
  for (BasisIndex j = 0; j < d; ++j) {
    for (BasisIndex i = 0; i < d; ++i) {
      if ((i & m) || (j & m)) rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 0.0;
    }
  }
}

// Gathers the bits of `b` at positions `qubits` into a compact index.
BasisIndex gather(BasisIndex b, std::span<const std::size_t> qubits) {
  BasisIndex out = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    out |= ((b >> qubits[i]) & 1u) << i;
  }
  return out;
}

std::vector<std::size_t> checked_keep(std::span<const std::size_t> keep, std::size_t n) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<std::size_t> k(keep.begin(), keep.end());
  std::sort(k.begin(), k.end());
  if (std::adjacent_find(k.begin(), k.end()) != k.end()) {
    throw std::invalid_argument("partial_trace: repeated qubit in keep set");
  }
  if (k.back() >= n) throw std::invalid_argument("partial_trace: qubit out of range");
  return k;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& keep, std::size_t n) {
  std::vector<std::size_t> rest;
  for (std::size_t q = 0, i = 0; q < n; ++q) {
    if (i < keep.size() && keep[i] == q) {
      ++i;
    } else {
      rest.push_back(q);
    }
  }
  return rest;
}

}  // namespace

Program::Program(const Circuit& circuit) : circuit_(circuit), ops_(lower(circuit)) {
  circuit_.validate();
  slot_ops_.resize(circuit_.n_params);
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    for (int k = 0; k < angle_count(ops_[j]); ++k) {
      if (ops_[j].angles[k].slot) slot_ops_[*ops_[j].angles[k].slot].emplace_back(j, k);
    }
  }
}

void Program::check_params(std::span<const Real> params) const {
  if (params.size() != circuit_.n_params) {
    throw std::invalid_argument("parameter vector has length " +
                                std::to_string(params.size()) + ", circuit expects " +
                                std::to_string(circuit_.n_params));
  }
}

Program::Resolved Program::resolve(std::span<const Real> params) const {
  check_params(params);
  Resolved angles(ops_.size(), {0.0, 0.0, 0.0});
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    for (int k = 0; k < angle_count(ops_[j]); ++k) angles[j][k] = ops_[j].angles[k].value(params);
  }
  return angles;
}

StateVector Program::run(std::span<const Real> params) const {
  if (circuit_.channel) throw std::invalid_argument("run: channel circuit needs run_density");
  return run_resolved(resolve(params));
}

StateVector Program::run_resolved(const Resolved& angles) const {
  StateVector psi = StateVector::occupied(circuit_.width(), circuit_.reference_occupations);
  const BasisIndex dim = psi.dim();
  for (std::size_t j = 0; j < ops_.size(); ++j) apply_op(ops_[j], angles[j], psi.data(), dim, false);
  return psi;
}

DensityMatrix Program::reference_density() const {
  return DensityMatrix::pure(
      StateVector::occupied(circuit_.n_system, circuit_.reference_occupations));
}

DensityMatrix Program::run_density(std::span<const Real> params,
                                   const DensityMatrix& rho_in) const {
  return run_density_resolved(resolve(params), rho_in);
}

DensityMatrix Program::run_density(std::span<const Real> params) const {
  return run_density(params, reference_density());
}

DensityMatrix Program::run_density_resolved(const Resolved& angles,
                                            const DensityMatrix& rho_in) const {
  if (rho_in.n_qubits() != circuit_.n_system) {
    throw std::invalid_argument("run_density: input state must cover the system register");
  }
  const BasisIndex dim = dimension_of(circuit_.width());
  const auto d = static_cast<Eigen::Index>(dim);
  const auto ds = static_cast<Eigen::Index>(rho_in.dim());
  // Ancillas are the high qubits, so ρ_in ⊗ |0⟩⟨0| is the top-left block.
  MatrixXc rho = MatrixXc::Zero(d, d);
  rho.topLeftCorner(ds, ds) = rho_in.matrix();

  // U ρ U† = U (U ρ)† for Hermitian ρ, applied per run of unitary ops.
  auto apply_segment = [&](std::size_t begin, std::size_t end) {
    if (begin == end) return;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index col = 0; col < d; ++col) {
        Complex* column = rho.col(col).data();
        for (std::size_t j = begin; j < end; ++j) apply_op(ops_[j], angles[j], column, dim, false);
      }
      rho = rho.adjoint().eval();
    }
  };
  std::size_t begin = 0;
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    if (ops_[j].kind != Op::Kind::Reset) continue;
    apply_segment(begin, j);
    for (auto q : ops_[j].reset) reset_qubit(rho, q);
    begin = j + 1;
  }
  apply_segment(begin, ops_.size());
  return reduce_to_low_qubits(DensityMatrix(circuit_.width(), std::move(rho)),
                              circuit_.n_system);
}

Real Program::energy_resolved(const Resolved& angles, const Observable& obs) const {
  if (circuit_.channel) return obs.expectation(run_density_resolved(angles, reference_density()));
  return obs.expectation(run_resolved(angles));
}

Real Program::energy(std::span<const Real> params, const Observable& obs) const {
  return energy_resolved(resolve(params), obs);
}

Real Program::parameter_shift_component(std::span<const Real> params, const Observable& obs,
                                        std::size_t slot) const {
  if (slot >= slot_ops_.size()) throw std::out_of_range("parameter_shift: slot");
  check_params(params);
  // ⟨c·I⟩ is c for every parameter value; skip the rounding noise.
  if (obs.is_constant()) return 0.0;
  Resolved angles = resolve(params);
  Real g = 0.0;
  for (auto [j, k] : slot_ops_[slot]) {
    const Real base = angles[j][k];
    angles[j][k] = base + kShift;
    const Real plus = energy_resolved(angles, obs);
    angles[j][k] = base - kShift;
    const Real minus = energy_resolved(angles, obs);
    angles[j][k] = base;
    g += ops_[j].angles[k].scale * 0.5 * (plus - minus);
  }
  return g;
}

VectorXr Program::parameter_shift(std::span<const Real> params, const Observable& obs) const {
  VectorXr g(static_cast<Eigen::Index>(circuit_.n_params));
  for (std::size_t k = 0; k < circuit_.n_params; ++k) {
    g[static_cast<Eigen::Index>(k)] = parameter_shift_component(params, obs, k);
  }
  return g;
}

EnergyGradient Program::adjoint(std::span<const Real> params, const Observable& obs) const {
  if (circuit_.channel) throw std::invalid_argument("adjoint: channel circuits unsupported");
  const Resolved angles = resolve(params);
  StateVector phi = run_resolved(angles);
  VectorXc lambda = obs.apply(phi);
  EnergyGradient out;
  out.value = phi.amplitudes().dot(lambda).real();
  out.gradient = VectorXr::Zero(static_cast<Eigen::Index>(circuit_.n_params));
  const BasisIndex dim = phi.dim();
  for (std::size_t j = ops_.size(); j-- > 0;) {
    const Op& op = ops_[j];
    // ∂/∂θ of exp(−iθP/2) contributes Im⟨λ|P|φ⟩ at the state after the op.
    if (op.kind == Op::Kind::Rotation && op.angles[0].slot) {
      const Complex z = kernels::pauli_inner<Real>(lambda.data(), phi.data(), dim, op.x, op.z, op.ny);
      out.gradient[static_cast<Eigen::Index>(*op.angles[0].slot)] += op.angles[0].scale * z.imag();
    } else if (op.kind == Op::Kind::Can) {
      Complex z[3];
      kernels::can_inner<Real>(lambda.data(), phi.data(), dim, op.q0, op.q1, z);
      for (int k = 0; k < 3; ++k) {
        if (!op.angles[k].slot) continue;
        out.gradient[static_cast<Eigen::Index>(*op.angles[k].slot)] += op.angles[k].scale * z[k].imag();
      }
    }
    if (j == 0) break;
    apply_op(op, angles[j], phi.data(), dim, true);
    apply_op(op, angles[j], lambda.data(), dim, true);
  }
  return out;
}

StateVector run_pure(const Circuit& c, std::span<const Real> params) {
  return Program(c).run(params);
}

DensityMatrix run_channel(const Circuit& c, std::span<const Real> params,
                          const DensityMatrix& rho_in) {
  if (!c.channel) throw std::invalid_argument("run_channel: circuit is not a channel circuit");
  return Program(c).run_density(params, rho_in);
}

VectorXr gradient(const Circuit& c, std::span<const Real> params, const PauliOperator& obs) {
  const Program p(c);
  return p.parameter_shift(params, Observable(obs, c.n_system));
}

Real expectation(const PauliOperator& obs, const StateVector& psi) {
  return Observable(obs, std::max(obs.span(), std::size_t{1})).expectation(psi);
}

Real expectation(const PauliOperator& obs, const DensityMatrix& rho) {
  return Observable(obs, std::max(obs.span(), std::size_t{1})).expectation(rho);
}

Eigen::Map<const MatrixXc> purification_view(const StateVector& psi, std::size_t n_low) {
  if (n_low > psi.n_qubits()) throw std::invalid_argument("purification_view: n_low");
  const auto rows = static_cast<Eigen::Index>(dimension_of(n_low));
  return Eigen::Map<const MatrixXc>(psi.data(), rows,
                                    static_cast<Eigen::Index>(psi.dim()) / rows);
}

DensityMatrix reduce_to_low_qubits(const StateVector& psi, std::size_t n_low) {
  const auto a = purification_view(psi, n_low);
  return DensityMatrix(n_low, a * a.adjoint());
}

DensityMatrix reduce_to_low_qubits(const DensityMatrix& rho, std::size_t n_low) {
  if (n_low > rho.n_qubits()) throw std::invalid_argument("reduce_to_low_qubits: n_low");
  const auto dl = static_cast<Eigen::Index>(dimension_of(n_low));
  const auto blocks = static_cast<Eigen::Index>(rho.dim()) / dl;
  MatrixXc out = MatrixXc::Zero(dl, dl);
  for (Eigen::Index r = 0; r < blocks; ++r) out += rho.matrix().block(r * dl, r * dl, dl, dl);
  return DensityMatrix(n_low, std::move(out));
}

DensityMatrix partial_trace(const StateVector& psi, std::span<const std::size_t> keep) {
  const auto k = checked_keep(keep, psi.n_qubits());
  const auto rest = complement(k, psi.n_qubits());
  const auto dk = static_cast<Eigen::Index>(dimension_of(k.size()));
  const auto dr = static_cast<Eigen::Index>(dimension_of(rest.size()));
  MatrixXc a = MatrixXc::Zero(dk, dr);
  for (BasisIndex b = 0; b < psi.dim(); ++b) {
    a(static_cast<Eigen::Index>(gather(b, k)), static_cast<Eigen::Index>(gather(b, rest))) = psi[b];
  }
  return DensityMatrix(k.size(), a * a.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const auto k = checked_keep(keep, rho.n_qubits());
  const auto rest = complement(k, rho.n_qubits());
  const auto dk = static_cast<Eigen::Index>(dimension_of(k.size()));
  MatrixXc out = MatrixXc::Zero(dk, dk);
  const BasisIndex dim = rho.dim();
  for (BasisIndex i = 0; i < dim; ++i) {
    const BasisIndex ri = gather(i, rest);
    const auto ki = static_cast<Eigen::Index>(gather(i, k));
    for (BasisIndex j = 0; j < dim; ++j) {
      if (gather(j, rest) != ri) continue;
      out(ki, static_cast<Eigen::Index>(gather(j, k))) +=
          rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return DensityMatrix(k.size(), std::move(out));
}

Real fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("fidelity: dimension mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

namespace {

// Eigenvalues at or below this are rounding noise of a rank-deficient state.
// Keeping them would add O(√noise) to the fidelity.
constexpr Real kRankTolerance = 1e-13;

// A with ρ = AA†, built from the retained eigenpairs.
MatrixXc square_root_factor(const MatrixXc& rho) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(rho);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > kRankTolerance) kept.push_back(i);
  }
  MatrixXc a(rho.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const Eigen::Index i = kept[k];
    a.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(i) * std::sqrt(es.eigenvalues()(i));
  }
  return a;
}

}  // namespace

Real uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.n_qubits() != sigma.n_qubits()) {
    throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
  }
  // (tr √(√ρ σ √ρ))² = ‖A†B‖²_tr for any factors ρ = AA†, σ = BB†.
  const MatrixXc a = square_root_factor(rho.matrix()), b = square_root_factor(sigma.matrix());
  if (a.cols() == 0 || b.cols() == 0) return 0.0;
  return purified_fidelity(a, b);
}

Real purified_fidelity(const Eigen::Ref<const MatrixXc>& a, const Eigen::Ref<const MatrixXc>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("purified_fidelity: dimension mismatch");
  const MatrixXc overlap = a.adjoint() * b;
  Eigen::JacobiSVD<MatrixXc> svd(overlap);
  const Real t = svd.singularValues().sum();
  return std::min<Real>(1.0, t * t);
}

}  // namespace haa
