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

// Amplitude-level kernels. Two implementations share one signature set:
//
//   cvqe::kernels          OpenMP data-parallel over amplitude strides
//   cvqe::kernels::serial  plain loops, kept as the reference for tests and
//                          as the baseline in bench/
//
// All kernels operate in place on 2^n amplitudes laid out as in qubit_bit().

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "cvqe/state.hpp"

namespace cvqe::kernels {

/// Registers with fewer amplitudes than this run the parallel kernels
/// single-threaded (thread start-up dominates below it).
std::size_t parallel_threshold() noexcept;
void set_parallel_threshold(std::size_t dimension) noexcept;

void apply_ry(std::span<cplx> amps, std::size_t n_qubits, std::size_t qubit, double theta);
void apply_x(std::span<cplx> amps, std::size_t n_qubits, std::size_t qubit);
void apply_cnot(std::span<cplx> amps, std::size_t n_qubits, std::size_t control, std::size_t target);
void apply_cz(std::span<cplx> amps, std::size_t n_qubits, std::size_t a, std::size_t b);

/// <psi|P|psi> for P = i^y_count X^x_mask Z^z_mask.
cplx pauli_expectation(std::span<const cplx> amps, std::uint64_t x_mask, std::uint64_t z_mask,
                       std::size_t y_count);

/// sum_i conj(amps[i ^ x_mask]) * diag[i] * amps[i]; the workhorse of
/// CompiledObservable.
cplx masked_overlap(std::span<const cplx> amps, std::uint64_t x_mask, std::span<const cplx> diag);

namespace serial {

void apply_ry(std::span<cplx> amps, std::size_t n_qubits, std::size_t qubit, double theta);
void apply_x(std::span<cplx> amps, std::size_t n_qubits, std::size_t qubit);
void apply_cnot(std::span<cplx> amps, std::size_t n_qubits, std::size_t control, std::size_t target);
void apply_cz(std::span<cplx> amps, std::size_t n_qubits, std::size_t a, std::size_t b);
cplx pauli_expectation(std::span<const cplx> amps, std::uint64_t x_mask, std::uint64_t z_mask,
                       std::size_t y_count);
cplx masked_overlap(std::span<const cplx> amps, std::uint64_t x_mask, std::span<const cplx> diag);

}  // namespace serial

/// i^k for integer k.
constexpr cplx i_power(std::size_t k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// Inserts a zero bit at position `bit` of `k`.
constexpr std::uint64_t insert_zero(std::uint64_t k, unsigned bit) {
  const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

}  // namespace cvqe::kernels
