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

// Serial reference kernels against the OpenMP versions.
//
//   ./build/bench/bench_kernels --benchmark_filter=Ry
//   OMP_NUM_THREADS=4 ./build/bench/bench_kernels

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cvqe/kernels.hpp"
#include "cvqe/state.hpp"

namespace {

std::vector<cvqe::cplx> random_state(std::size_t n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> d;
  std::vector<cvqe::cplx> v(std::size_t{1} << n);
  for (auto& a : v) a = {d(rng), d(rng)};
  return v;
}

template <bool Parallel>
void BM_Ry(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  auto amps = random_state(n);
  for (auto _ : st) {
    if constexpr (Parallel)
      cvqe::kernels::apply_ry(amps, n, n / 2, 0.3);
    else
      cvqe::kernels::serial::apply_ry(amps, n, n / 2, 0.3);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <bool Parallel>
void BM_Cnot(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  auto amps = random_state(n);
  for (auto _ : st) {
    if constexpr (Parallel)
      cvqe::kernels::apply_cnot(amps, n, 0, n - 1);
    else
      cvqe::kernels::serial::apply_cnot(amps, n, 0, n - 1);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <bool Parallel>
void BM_PauliExpectation(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto amps = random_state(n);
  const std::uint64_t x = 0b1011, z = 0b0110;
  for (auto _ : st) {
    cvqe::cplx e;
    if constexpr (Parallel)
      e = cvqe::kernels::pauli_expectation(amps, x, z, 1);
    else
      e = cvqe::kernels::serial::pauli_expectation(amps, x, z, 1);
    benchmark::DoNotOptimize(e);
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(amps.size()));
}

}  // namespace

BENCHMARK_TEMPLATE(BM_Ry, false)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_Ry, true)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_Cnot, false)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_Cnot, true)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_PauliExpectation, false)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_PauliExpectation, true)->DenseRange(12, 22, 5);

BENCHMARK_MAIN();
