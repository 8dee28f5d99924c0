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

#include <bit>
#include <cmath>
#include <utility>

#include "cvqe/kernels.hpp"

namespace cvqe::kernels::serial {

void apply_ry(std::span<cplx> amps, std::size_t n_qubits, std::size_t qubit, double theta) {
  const auto bit = static_cast<unsigned>(n_qubits - 1 - qubit);
  const std::uint64_t stride = std::uint64_t{1} << bit;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::uint64_t half = amps.size() / 2;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = insert_zero(k, bit);
    const std::uint64_t i1 = i0 | stride;
    const cplx a0 = amps[i0];
    const cplx a1 = amps[i1];
    amps[i0] = c * a0 - s * a1;
    amps[i1] = s * a0 + c * a1;
  }
}

void apply_x(std::span<cplx> amps, std::size_t n_qubits, std::size_t qubit) {
  const auto bit = static_cast<unsigned>(n_qubits - 1 - qubit);
  const std::uint64_t stride = std::uint64_t{1} << bit;
  const std::uint64_t half = amps.size() / 2;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = insert_zero(k, bit);
    std::swap(amps[i0], amps[i0 | stride]);
  }
}

void apply_cnot(std::span<cplx> amps, std::size_t n_qubits, std::size_t control, std::size_t target) {
  const auto cbit = static_cast<unsigned>(n_qubits - 1 - control);
  const auto tbit = static_cast<unsigned>(n_qubits - 1 - target);
  const std::uint64_t cmask = std::uint64_t{1} << cbit;
  const std::uint64_t tmask = std::uint64_t{1} << tbit;
  const unsigned lo = cbit < tbit ? cbit : tbit;
  const unsigned hi = cbit < tbit ? tbit : cbit;
  const std::uint64_t quarter = amps.size() / 4;
  for (std::uint64_t k = 0; k < quarter; ++k) {
    const std::uint64_t i = insert_zero(insert_zero(k, lo), hi) | cmask;
    std::swap(amps[i], amps[i | tmask]);
  }
}

void apply_cz(std::span<cplx> amps, std::size_t n_qubits, std::size_t a, std::size_t b) {
  const auto abit = static_cast<unsigned>(n_qubits - 1 - a);
  const auto bbit = static_cast<unsigned>(n_qubits - 1 - b);
  const std::uint64_t both = (std::uint64_t{1} << abit) | (std::uint64_t{1} << bbit);
  const unsigned lo = abit < bbit ? abit : bbit;
  const unsigned hi = abit < bbit ? bbit : abit;
  const std::uint64_t quarter = amps.size() / 4;
  for (std::uint64_t k = 0; k < quarter; ++k) {
    const std::uint64_t i = insert_zero(insert_zero(k, lo), hi) | both;
    amps[i] = -amps[i];
  }
}

cplx pauli_expectation(std::span<const cplx> amps, std::uint64_t x_mask, std::uint64_t z_mask,
                       std::size_t y_count) {
  cplx acc{};
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const cplx term = std::conj(amps[i ^ x_mask]) * amps[i];
    acc += (std::popcount(i & z_mask) & 1) ? -term : term;
  }
  return i_power(y_count) * acc;
}

cplx masked_overlap(std::span<const cplx> amps, std::uint64_t x_mask, std::span<const cplx> diag) {
  cplx acc{};
  for (std::uint64_t i = 0; i < amps.size(); ++i) acc += std::conj(amps[i ^ x_mask]) * diag[i] * amps[i];
  return acc;
}

}  // namespace cvqe::kernels::serial
