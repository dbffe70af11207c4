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

#ifndef HAA_FCIDUMP_HPP
#define HAA_FCIDUMP_HPP

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "haa/types.hpp"

namespace haa {

/// Malformed FCIDUMP input. Carries the offending line when known.
class FcidumpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Spatial-orbital integrals as found in an FCIDUMP file.
 *
 * `h` holds h_pq; `eri` holds (pq|rs) in chemists' notation as a dense
 * n_orb^4 array with all eight permutational images populated. Zero-based
 * indices throughout.
 */
struct MolecularIntegrals {
  std::size_t n_orb = 0;
  int n_elec = 0;
  int ms2 = 0;
  Real e_core = 0.0;
  Eigen::MatrixXd h;
  std::vector<Real> eri;

  MolecularIntegrals() = default;
  explicit MolecularIntegrals(std::size_t norb);

  Real& eri_at(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return eri[((p * n_orb + q) * n_orb + r) * n_orb + s];
  }
  Real eri_at(std::size_t p, std::size_t q, std::size_t r,
              std::size_t s) const {
    return eri[((p * n_orb + q) * n_orb + r) * n_orb + s];
  }

  /// Relabels spatial orbitals: new orbital i is old orbital perm[i].
  MolecularIntegrals permuted(const std::vector<std::size_t>& perm) const;
};

/// Molpro-convention reader. Accepts `&FCI ... &END` or `/` terminators,
/// Fortran `D` exponents, and ignores ORBSYM/ISYM and orbital-energy records.
MolecularIntegrals parse_fcidump(std::istream& in);
MolecularIntegrals parse_fcidump_string(const std::string& text);
MolecularIntegrals read_fcidump(const std::filesystem::path& path);

/// Writes unique records (i≥j, k≥l, ij≥kl) with 17 significant digits.
std::string render_fcidump(const MolecularIntegrals& integrals);

}  // namespace haa

#endif  // HAA_FCIDUMP_HPP
