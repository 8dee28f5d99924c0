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
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "cvqe/ansatz.hpp"
#include "cvqe/pauli.hpp"
#include "cvqe/simulator.hpp"

namespace cvqe {

enum class Strategy { Default, Adiabatic };
enum class GradientMode { ParameterShift, FiniteDifference };

Strategy parse_strategy(std::string_view name);
std::string_view to_string(Strategy s);

struct VqeOptions {
  int max_iterations = 200;
  int restarts = 10;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Default;
  GradientMode gradient_mode = GradientMode::ParameterShift;
  /// Per-term binomial sampling with this many shots instead of exact
  /// expectations. The optimizer is not tuned for noisy objectives.
  std::optional<std::size_t> shots;
  /// Called with every energy the objective computes. Restarts may run on
  /// several threads, so the callback must be thread-safe.
  std::function<void(double)> on_evaluation;
};

struct VqeProblem {
  VqeProblem(Observable hamiltonian, AnsatzSpec spec, VqeOptions options = {});

  Observable hamiltonian;
  AnsatzSpec spec;
  VqeOptions options;
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> parameters;
  int iterations_used = 0;
  int restart_index = 0;
  bool converged = false;
  std::optional<double> delta_Ec;
};

/// Energy landscape of one problem. Owns the compiled circuit, observable and
/// a scratch state, so an instance must not be shared across threads.
class EnergyFunction {
 public:
  explicit EnergyFunction(const VqeProblem& problem);

  std::size_t n_parameters() const noexcept { return circuit_.n_parameters(); }
  const Circuit& circuit() const noexcept { return circuit_; }

  /// Throws StructuralError on a length mismatch.
  double value(std::span<const double> parameters);

  /// Parameter-shift rule (E(t + pi/2) - E(t - pi/2)) / 2 summed over every
  /// gate sharing a slot, or central differences with step 1e-5.
  void gradient(std::span<const double> parameters, std::span<double> out);

 private:
  double energy_with_angles(std::span<const double> gate_angles);
  void resolve(std::span<const double> parameters);

  Circuit circuit_;
  CompiledObservable compiled_;
  Observable hamiltonian_;
  GradientMode mode_;
  std::optional<std::size_t> shots_;
  std::function<void(double)> on_evaluation_;
  StateVector state_;
  std::vector<double> gate_angles_;
  std::mt19937_64 shot_rng_;
};

double objective(const VqeProblem& problem, std::span<const double> parameters);
std::vector<double> gradient(const VqeProblem& problem, std::span<const double> parameters);

/// One local minimization from `initial`; restart_index is left at 0.
VqeResult minimize(const VqeProblem& problem, std::span<const double> initial);

/// Uniform starts in [0, 2pi) for one restart. The stream depends only on
/// (seed, restart), so serial and parallel runs agree.
std::vector<double> random_start(std::size_t n_parameters, std::uint64_t seed, int restart);

/// Best of `restarts` minimizations from random starts (ties keep the lower
/// restart index). The adiabatic strategy needs a path, see solve_path().
VqeResult solve(const VqeProblem& problem);

/// Solves a sequence of Hamiltonians sharing one ansatz. Default strategy
/// solves each point independently. Adiabatic solves `anchor` with random
/// restarts, then walks outward in both directions, each point starting
/// from its neighbour's converged parameters with a single minimization.
std::vector<VqeResult> solve_path(const std::vector<Observable>& hamiltonians, const AnsatzSpec& spec,
                                  const VqeOptions& options, std::size_t anchor = 0);

}  // namespace cvqe
