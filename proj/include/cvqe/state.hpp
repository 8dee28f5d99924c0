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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cvqe {

using cplx = std::complex<double>;

/// Largest register the dense simulator will allocate.
inline constexpr std::size_t kMaxSimulatorQubits = 26;

/// Basis-index bit that holds qubit `q` in an `n`-qubit register.
///
/// Qubit 0 is the most significant bit of the basis index and the leftmost
/// letter of a Pauli string; every module shares this convention.
constexpr std::uint64_t qubit_bit(std::size_t n_qubits, std::size_t q) {
  return std::uint64_t{1} << (n_qubits - 1 - q);
}

/// Dense 2^n amplitude vector. Default-constructed to |0...0>.
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);

  /// Takes ownership of explicit amplitudes; size must be 2^n_qubits.
  static StateVector from_amplitudes(std::size_t n_qubits, std::vector<cplx> amplitudes);

  /// Computational basis state; `index` uses the qubit_bit() layout.
  static StateVector basis(std::size_t n_qubits, std::uint64_t index);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<cplx> amplitudes() noexcept { return amplitudes_; }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }

  cplx operator[](std::uint64_t i) const { return amplitudes_[i]; }
  cplx& operator[](std::uint64_t i) { return amplitudes_[i]; }

  double norm() const;
  void reset();  // back to |0...0>

  /// Bitstring label of basis index `i`, qubit 0 first.
  std::string label(std::uint64_t i) const;

 private:
  StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes);

  std::size_t n_qubits_;
  std::vector<cplx> amplitudes_;
};

}  // namespace cvqe
