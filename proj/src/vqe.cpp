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

#include "cvqe/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "cvqe/errors.hpp"
#include "cvqe/optimizer.hpp"

namespace cvqe {

Strategy parse_strategy(std::string_view name) {
  if (name == "default") return Strategy::Default;
  if (name == "adiabatic") return Strategy::Adiabatic;
  throw StructuralError("unknown strategy '" + std::string(name) + "' (expected default or adiabatic)");
}

std::string_view to_string(Strategy s) { return s == Strategy::Default ? "default" : "adiabatic"; }

VqeProblem::VqeProblem(Observable h, AnsatzSpec s, VqeOptions o)
    : hamiltonian(std::move(h)), spec(std::move(s)), options(std::move(o)) {
  if (options.max_iterations < 1) throw StructuralError("max_iterations must be at least 1");
  if (options.restarts < 1) throw StructuralError("restarts must be at least 1");
  if (hamiltonian.n_qubits() != spec.cluster.n_qubits())
    throw StructuralError("Hamiltonian acts on " + std::to_string(hamiltonian.n_qubits()) + " qubits, ansatz on " +
                          std::to_string(spec.cluster.n_qubits()));
  if (spec.reps < 0) throw StructuralError("reps must be non-negative");
}

EnergyFunction::EnergyFunction(const VqeProblem& problem)
    : circuit_(build(problem.spec)),
      compiled_(problem.hamiltonian),
      hamiltonian_(normalize(problem.hamiltonian)),
      mode_(problem.options.gradient_mode),
      shots_(problem.options.shots),
      on_evaluation_(problem.options.on_evaluation),
      state_(circuit_.n_qubits()),
      gate_angles_(circuit_.gates().size(), 0.0),
      shot_rng_(problem.options.seed) {
  if (shots_ && *shots_ == 0) throw StructuralError("shots must be positive");
}

void EnergyFunction::resolve(std::span<const double> parameters) {
  if (parameters.size() != circuit_.n_parameters())
    throw StructuralError("ansatz takes " + std::to_string(circuit_.n_parameters()) + " parameters, got " +
                          std::to_string(parameters.size()));
  const auto& gates = circuit_.gates();
  for (std::size_t i = 0; i < gates.size(); ++i)
    gate_angles_[i] = gates[i].parameter ? parameters[*gates[i].parameter] : gates[i].angle;
}

double EnergyFunction::energy_with_angles(std::span<const double> gate_angles) {
  state_.reset();
  const auto& gates = circuit_.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) apply_gate(state_, gates[i], gate_angles[i]);

  double e = 0.0;
  if (!shots_) {
    e = compiled_.expectation(state_);
  } else {
    for (const auto& t : hamiltonian_.terms()) {
      if (t.string.is_identity()) {
        e += t.coefficient;
        continue;
      }
      const double exact = expectation(state_, t.string).real();
      const double p = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
      std::binomial_distribution<std::size_t> draw(*shots_, p);
      const double estimate = 2.0 * static_cast<double>(draw(shot_rng_)) / static_cast<double>(*shots_) - 1.0;
      e += t.coefficient * estimate;
    }
  }
  if (on_evaluation_) on_evaluation_(e);
  return e;
}

double EnergyFunction::value(std::span<const double> parameters) {
  resolve(parameters);
  return energy_with_angles(gate_angles_);
}

void EnergyFunction::gradient(std::span<const double> parameters, std::span<double> out) {
  if (out.size() != circuit_.n_parameters()) throw StructuralError("gradient buffer has the wrong length");
  std::fill(out.begin(), out.end(), 0.0);
  const auto& gates = circuit_.gates();

  if (mode_ == GradientMode::FiniteDifference) {
    constexpr double step = 1e-5;
    std::vector<double> shifted(parameters.begin(), parameters.end());
    for (std::size_t k = 0; k < shifted.size(); ++k) {
      const double keep = shifted[k];
      shifted[k] = keep + step;
      const double plus = value(shifted);
      shifted[k] = keep - step;
      const double minus = value(shifted);
      shifted[k] = keep;
      out[k] = (plus - minus) / (2.0 * step);
    }
    return;
  }

  for (const auto& g : gates)
    if (g.parameter && g.kind != GateKind::RY)
      throw UnsupportedError("parameter-shift rule needs RY generators, found " + to_string(g.kind));
  resolve(parameters);
  std::vector<double> angles = gate_angles_;
  constexpr double shift = std::numbers::pi / 2;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!gates[i].parameter) continue;
    const double keep = angles[i];
    angles[i] = keep + shift;
    const double plus = energy_with_angles(angles);
    angles[i] = keep - shift;
    const double minus = energy_with_angles(angles);
    angles[i] = keep;
    out[*gates[i].parameter] += 0.5 * (plus - minus);
  }
}

double objective(const VqeProblem& problem, std::span<const double> parameters) {
  EnergyFunction f(problem);
  return f.value(parameters);
}

std::vector<double> gradient(const VqeProblem& problem, std::span<const double> parameters) {
  EnergyFunction f(problem);
  std::vector<double> g(f.n_parameters());
  f.gradient(parameters, g);
  return g;
}

namespace {

VqeResult minimize_with(EnergyFunction& f, const VqeOptions& options, std::span<const double> initial) {
  if (initial.size() != f.n_parameters())
    throw StructuralError("ansatz takes " + std::to_string(f.n_parameters()) + " parameters, got " +
                          std::to_string(initial.size()));
  OptimizerOptions opt;
  opt.max_iterations = options.max_iterations;
  const Objective obj{[&f](std::span<const double> x) { return f.value(x); },
                      [&f](std::span<const double> x, std::span<double> g) { f.gradient(x, g); }};
  auto r = slsqp(obj, {initial.begin(), initial.end()}, opt);
  VqeResult out;
  out.energy = r.value;
  out.parameters = std::move(r.x);
  out.iterations_used = r.iterations;
  out.converged = r.converged;
  return out;
}

bool better(const VqeResult& a, const VqeResult& b) { return a.energy < b.energy; }

}  // namespace

VqeResult minimize(const VqeProblem& problem, std::span<const double> initial) {
  EnergyFunction f(problem);
  return minimize_with(f, problem.options, initial);
}

std::vector<double> random_start(std::size_t n_parameters, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  std::vector<double> x(n_parameters);
  for (auto& v : x) v = dist(rng);
  return x;
}

VqeResult solve(const VqeProblem& problem) {
  const int restarts = problem.options.restarts;
  std::vector<VqeResult> results(restarts);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) if (problem.options.shots == std::nullopt)
  for (int r = 0; r < restarts; ++r) {
    try {
      EnergyFunction f(problem);
      results[r] = minimize_with(f, problem.options, random_start(f.n_parameters(), problem.options.seed, r));
      results[r].restart_index = r;
    } catch (...) {
#pragma omp critical(cvqe_solve_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (better(results[r], results[best])) best = r;
  return results[best];
}

std::vector<VqeResult> solve_path(const std::vector<Observable>& hamiltonians, const AnsatzSpec& spec,
                                  const VqeOptions& options, std::size_t anchor) {
  std::vector<VqeResult> out(hamiltonians.size());
  if (hamiltonians.empty()) return out;

  if (options.strategy == Strategy::Default) {
    for (std::size_t i = 0; i < hamiltonians.size(); ++i) out[i] = solve(VqeProblem(hamiltonians[i], spec, options));
    return out;
  }

  if (anchor >= hamiltonians.size()) throw StructuralError("anchor index outside the path");
  out[anchor] = solve(VqeProblem(hamiltonians[anchor], spec, options));
  auto step = [&](std::size_t from, std::size_t to) {
    VqeProblem p(hamiltonians[to], spec, options);
    out[to] = minimize(p, out[from].parameters);
    out[to].restart_index = out[from].restart_index;
  };
  for (std::size_t i = anchor + 1; i < hamiltonians.size(); ++i) step(i - 1, i);
  for (std::size_t i = anchor; i-- > 0;) step(i + 1, i);
  return out;
}

}  // namespace cvqe
