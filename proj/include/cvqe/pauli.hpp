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

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvqe/linalg.hpp"
#include "cvqe/state.hpp"

namespace cvqe {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// Tensor product of single-qubit Pauli letters; letter i acts on qubit i.
///
/// Qubit 0 is the leftmost letter and maps to the most significant bit of a
/// basis index (see qubit_bit()).
class PauliString {
 public:
  PauliString() = default;

  /// Identity string on `n_qubits` qubits.
  explicit PauliString(std::size_t n_qubits);

  /// Parses letters from {I, X, Y, Z}; throws StructuralError otherwise.
  static PauliString from_string(std::string_view letters);

  /// `letter` on `qubit`, identity elsewhere.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli letter);

  std::size_t n_qubits() const noexcept { return letters_.size(); }
  Pauli operator[](std::size_t q) const { return letters_[q]; }
  void set(std::size_t q, Pauli p);

  bool is_identity() const noexcept;
  std::string str() const;

  /// Basis-index masks: x_mask flags qubits carrying X or Y, z_mask flags
  /// qubits carrying Z or Y.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;
  std::size_t y_count() const noexcept;

  auto operator<=>(const PauliString&) const = default;
  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> letters_;
};

/// Product a*b as phase * string, phase in {1, i, -1, -i}.
std::pair<std::complex<double>, PauliString> multiply(const PauliString& a, const PauliString& b);

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// Default magnitude below which normalize() drops a term.
inline constexpr double kDropTolerance = 1e-12;

/// Largest register to_matrix() will densify by default.
inline constexpr std::size_t kDenseQubitCap = 14;

/// Real-weighted sum of Pauli strings on a fixed register.
class Observable {
 public:
  explicit Observable(std::size_t n_qubits);

  /// Throws StructuralError when any term's string length differs from n_qubits.
  Observable(std::size_t n_qubits, std::vector<PauliTerm> terms);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add(double coefficient, PauliString string);
  void add(double coefficient, std::string_view letters);

  Observable& operator+=(const Observable& other);
  Observable& operator*=(double scale);

  /// Coefficient of `string` summed over all matching terms.
  double coefficient(const PauliString& string) const;

 private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

Observable operator+(Observable a, const Observable& b);
Observable operator*(double scale, Observable obs);

/// Merges duplicate strings, drops |c| < drop_tolerance, sorts
/// lexicographically on letters (I < X < Y < Z).
Observable normalize(const Observable& obs, double drop_tolerance = kDropTolerance);

/// Number of distinct non-identity strings after normalization.
std::size_t term_count(const Observable& obs);

/// Dense 2^n matrix. Throws ResourceError above `max_qubits`.
ComplexMatrix to_matrix(const Observable& obs, std::size_t max_qubits = kDenseQubitCap);

/// <psi|H|psi>, term by term without building the matrix.
double expectation(const StateVector& state, const Observable& obs);

/// <psi|P|psi> for one string (complex in general; real for Hermitian P).
std::complex<double> expectation(const StateVector& state, const PauliString& string);

/// Observable pre-grouped by X-mask with per-basis-state phase diagonals.
/// Evaluates <psi|H|psi> in one pass per distinct X-mask; used inside the
/// variational loop where the same Hamiltonian is evaluated many times.
class CompiledObservable {
 public:
  explicit CompiledObservable(const Observable& obs);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t group_count() const noexcept { return groups_.size(); }

  double expectation(const StateVector& state) const;

 private:
  struct Group {
    std::uint64_t x_mask = 0;
    std::vector<cplx> diagonal;
  };
  std::size_t n_qubits_;
  std::vector<Group> groups_;
};

// Pauli-sum text format: "<coefficient> <letters>" per line, '#' comments.
Observable parse_pauli_sum(std::string_view text, std::string_view source = "<string>");
Observable read_pauli_file(const std::filesystem::path& path);
std::string format_pauli_sum(const Observable& obs);

}  // namespace cvqe
