// Copyright 2026 The clustervqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvqe/pauli.hpp"

namespace cvqe {

/// Electronic integrals over spatial orbitals, chemists' notation.
class FcidumpData {
 public:
  FcidumpData() = default;
  FcidumpData(std::size_t n_orbitals, int n_electrons, int ms2);

  std::size_t n_orbitals() const noexcept { return n_orbitals_; }
  int n_electrons() const noexcept { return n_electrons_; }
  int ms2() const noexcept { return ms2_; }
  double core_energy() const noexcept { return core_energy_; }
  void set_core_energy(double e) noexcept { core_energy_ = e; }

  double one_body(std::size_t p, std::size_t q) const { return h1_[p * n_orbitals_ + q]; }
  double two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return h2_[((p * n_orbitals_ + q) * n_orbitals_ + r) * n_orbitals_ + s];
  }

  /// Sets h_pq and h_qp.
  void set_one_body(std::size_t p, std::size_t q, double v);
  /// Sets (pq|rs) and its 7 symmetry images.
  void set_two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v);

  /// Throws StructuralError if a symmetry or electron-count invariant fails.
  void validate(double tol = 1e-10) const;

 private:
  std::size_t n_orbitals_ = 0;
  int n_electrons_ = 0;
  int ms2_ = 0;
  double core_energy_ = 0.0;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

/// Parses `&FCI NORB=..,NELEC=..,MS2=.., &END` (or `/`) followed by
/// `value i j k l` lines with 1-based orbital indices.
FcidumpData parse_fcidump(std::string_view text, std::string_view source = "<string>");
FcidumpData read_fcidump(const std::filesystem::path& path);

/// Unique integrals (p>=q, r>=s, pq>=rs), zeros skipped, 17 significant digits.
std::string format_fcidump(const FcidumpData& data);

struct LadderOp {
  std::size_t mode = 0;
  bool dagger = false;

  bool operator==(const LadderOp&) const = default;
};

struct FermionTerm {
  double coefficient = 0.0;
  std::vector<LadderOp> ops;  // applied right to left, like the written product
};

/// Second-quantized operator on `n_modes` spin orbitals. An empty ops list
/// is the identity (constant) term.
class FermionOperator {
 public:
  explicit FermionOperator(std::size_t n_modes);

  std::size_t n_modes() const noexcept { return n_modes_; }
  const std::vector<FermionTerm>& terms() const noexcept { return terms_; }

  /// Throws StructuralError on odd-length products or out-of-range modes.
  void add(double coefficient, std::vector<LadderOp> ops);

 private:
  std::size_t n_modes_;
  std::vector<FermionTerm> terms_;
};

/// a+_p a_q shorthand.
inline LadderOp create(std::size_t mode) { return {mode, true}; }
inline LadderOp annihilate(std::size_t mode) { return {mode, false}; }

/// H = sum h_pq a+_p a_q + 1/2 sum (pq|rs) a+_p a+_r a_s a_q + E_core over
/// spin orbitals in block order: spin-up modes 0..n-1, spin-down n..2n-1.
FermionOperator to_fermion_hamiltonian(const FcidumpData& data);

/// a+_j -> (X_j - iY_j)/2 Z_0 ... Z_{j-1}. Throws ConsistencyError when the
/// mapped operator keeps an imaginary coefficient above 1e-10.
Observable jordan_wigner(const FermionOperator& op);

/// Symmetry sector used to drop the two pinned parity qubits.
struct ParityReduction {
  int n_electrons = 0;
  int ms2 = 0;
};

/// Parity encoding: qubit j holds the parity of modes 0..j, so
/// a+_j -> X_{j+1..N-1} (X_j Z_{j-1} - iY_j)/2.
///
/// With `reduction`, qubits N/2-1 (spin-up parity) and N-1 (total parity)
/// are replaced by their eigenvalues in the given sector and removed,
/// leaving N-2 qubits. Throws UnsupportedError if the sector is
/// inconsistent or the operator acts non-diagonally on a pinned qubit.
Observable parity_map(const FermionOperator& op, std::optional<ParityReduction> reduction = std::nullopt);

}  // namespace cvqe
