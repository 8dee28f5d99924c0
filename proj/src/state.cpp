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

#include "cvqe/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvqe/errors.hpp"

namespace cvqe {

namespace {

void check_qubits(std::size_t n_qubits) {
  if (n_qubits == 0) throw StructuralError("state vector needs at least one qubit");
  if (n_qubits > kMaxSimulatorQubits)
    throw ResourceError("state vector of " + std::to_string(n_qubits) + " qubits exceeds cap of " +
                        std::to_string(kMaxSimulatorQubits));
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::size_t n_qubits, std::vector<cplx> amplitudes) {
  check_qubits(n_qubits);
  if (amplitudes.size() != (std::size_t{1} << n_qubits))
    throw StructuralError("amplitude count " + std::to_string(amplitudes.size()) +
                          " does not match 2^" + std::to_string(n_qubits));
  return StateVector(n_qubits, std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) throw StructuralError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::reset() {
  std::fill(amplitudes_.begin(), amplitudes_.end(), cplx{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

std::string StateVector::label(std::uint64_t i) const {
  std::string out(n_qubits_, '0');
  for (std::size_t q = 0; q < n_qubits_; ++q)
    if (i & qubit_bit(n_qubits_, q)) out[q] = '1';
  return out;
}

}  // namespace cvqe
