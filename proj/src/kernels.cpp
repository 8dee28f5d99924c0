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

#include "cvqe/kernels.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>

namespace cvqe::kernels {

namespace {

std::atomic<std::size_t> g_threshold{std::size_t{1} << 14};

// OpenMP wants a signed induction variable.
using idx_t = std::int64_t;

}  // namespace

std::size_t parallel_threshold() noexcept { return g_threshold.load(std::memory_order_relaxed); }

void set_parallel_threshold(std::size_t dimension) noexcept {
  g_threshold.store(dimension, std::memory_order_relaxed);
}

void apply_ry(std::span<cplx> amps, std::size_t n_qubits, std::size_t qubit, double theta) {
  // Forking a team costs more than the loop below the threshold.
  if (amps.size() < parallel_threshold()) return serial::apply_ry(amps, n_qubits, qubit, theta);
  const auto bit = static_cast<unsigned>(n_qubits - 1 - qubit);
  const std::uint64_t stride = std::uint64_t{1} << bit;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const auto half = static_cast<idx_t>(amps.size() / 2);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static)
  for (idx_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), bit);
    const std::uint64_t i1 = i0 | stride;
    const cplx a0 = a[i0];
    const cplx a1 = a[i1];
    a[i0] = c * a0 - s * a1;
    a[i1] = s * a0 + c * a1;
  }
}

void apply_x(std::span<cplx> amps, std::size_t n_qubits, std::size_t qubit) {
  if (amps.size() < parallel_threshold()) return serial::apply_x(amps, n_qubits, qubit);
  const auto bit = static_cast<unsigned>(n_qubits - 1 - qubit);
  const std::uint64_t stride = std::uint64_t{1} << bit;
  const auto half = static_cast<idx_t>(amps.size() / 2);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static)
  for (idx_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), bit);
    std::swap(a[i0], a[i0 | stride]);
  }
}

void apply_cnot(std::span<cplx> amps, std::size_t n_qubits, std::size_t control, std::size_t target) {
  if (amps.size() < parallel_threshold()) return serial::apply_cnot(amps, n_qubits, control, target);
  const auto cbit = static_cast<unsigned>(n_qubits - 1 - control);
  const auto tbit = static_cast<unsigned>(n_qubits - 1 - target);
  const std::uint64_t cmask = std::uint64_t{1} << cbit;
  const std::uint64_t tmask = std::uint64_t{1} << tbit;
  const unsigned lo = cbit < tbit ? cbit : tbit;
  const unsigned hi = cbit < tbit ? tbit : cbit;
  const auto quarter = static_cast<idx_t>(amps.size() / 4);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static)
  for (idx_t k = 0; k < quarter; ++k) {
    const std::uint64_t i = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi) | cmask;
    std::swap(a[i], a[i | tmask]);
  }
}

void apply_cz(std::span<cplx> amps, std::size_t n_qubits, std::size_t qa, std::size_t qb) {
  if (amps.size() < parallel_threshold()) return serial::apply_cz(amps, n_qubits, qa, qb);
  const auto abit = static_cast<unsigned>(n_qubits - 1 - qa);
  const auto bbit = static_cast<unsigned>(n_qubits - 1 - qb);
  const std::uint64_t both = (std::uint64_t{1} << abit) | (std::uint64_t{1} << bbit);
  const unsigned lo = abit < bbit ? abit : bbit;
  const unsigned hi = abit < bbit ? bbit : abit;
  const auto quarter = static_cast<idx_t>(amps.size() / 4);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static)
  for (idx_t k = 0; k < quarter; ++k) {
    const std::uint64_t i = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi) | both;
    a[i] = -a[i];
  }
}

cplx pauli_expectation(std::span<const cplx> amps, std::uint64_t x_mask, std::uint64_t z_mask,
                       std::size_t y_count) {
  if (amps.size() < parallel_threshold()) return serial::pauli_expectation(amps, x_mask, z_mask, y_count);
  double re = 0.0;
  double im = 0.0;
  const auto dim = static_cast<idx_t>(amps.size());
  const cplx* a = amps.data();
#pragma omp parallel for schedule(static) reduction(+ : re, im)
  for (idx_t k = 0; k < dim; ++k) {
    const auto i = static_cast<std::uint64_t>(k);
    cplx term = std::conj(a[i ^ x_mask]) * a[i];
    if (std::popcount(i & z_mask) & 1) term = -term;
    re += term.real();
    im += term.imag();
  }
  return i_power(y_count) * cplx{re, im};
}

cplx masked_overlap(std::span<const cplx> amps, std::uint64_t x_mask, std::span<const cplx> diag) {
  if (amps.size() < parallel_threshold()) return serial::masked_overlap(amps, x_mask, diag);
  double re = 0.0;
  double im = 0.0;
  const auto dim = static_cast<idx_t>(amps.size());
  const cplx* a = amps.data();
  const cplx* d = diag.data();
#pragma omp parallel for schedule(static) reduction(+ : re, im)
  for (idx_t k = 0; k < dim; ++k) {
    const auto i = static_cast<std::uint64_t>(k);
    const cplx term = std::conj(a[i ^ x_mask]) * d[i] * a[i];
    re += term.real();
    im += term.imag();
  }
  return {re, im};
}

}  // namespace cvqe::kernels
