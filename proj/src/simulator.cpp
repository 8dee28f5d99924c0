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

#include "cvqe/simulator.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cvqe/errors.hpp"
#include "cvqe/kernels.hpp"

namespace cvqe {

Gate Gate::ry(std::size_t qubit, double angle) {
  Gate g;
  g.kind = GateKind::RY;
  g.qubits = {qubit, 0};
  g.angle = angle;
  return g;
}

Gate Gate::ry_param(std::size_t qubit, std::size_t slot) {
  Gate g = ry(qubit, 0.0);
  g.parameter = slot;
  return g;
}

Gate Gate::x(std::size_t qubit) {
  Gate g;
  g.kind = GateKind::X;
  g.qubits = {qubit, 0};
  return g;
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
  Gate g;
  g.kind = GateKind::CNOT;
  g.qubits = {control, target};
  return g;
}

Gate Gate::cz(std::size_t a, std::size_t b) {
  Gate g;
  g.kind = GateKind::CZ;
  g.qubits = {a, b};
  return g;
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RY: return "RY";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
  }
  return "?";
}

namespace {

void check_gate(std::size_t n_qubits, const Gate& gate) {
  for (auto q : gate.targets())
    if (q >= n_qubits)
      throw StructuralError(to_string(gate.kind) + " on qubit " + std::to_string(q) + " of a " +
                            std::to_string(n_qubits) + "-qubit register");
  if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1])
    throw StructuralError(to_string(gate.kind) + " needs two distinct qubits");
  if (gate.parameter && gate.kind != GateKind::RY)
    throw StructuralError("only RY gates may carry a variational parameter");
}

}  // namespace

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw StructuralError("circuit needs at least one qubit");
}

Circuit& Circuit::add(const Gate& gate) {
  check_gate(n_qubits_, gate);
  if (gate.parameter) n_parameters_ = std::max(n_parameters_, *gate.parameter + 1);
  gates_.push_back(gate);
  return *this;
}

void Circuit::validate() const {
  std::vector<bool> used(n_parameters_, false);
  for (const auto& g : gates_)
    if (g.parameter) used[*g.parameter] = true;
  for (std::size_t k = 0; k < used.size(); ++k)
    if (!used[k]) throw StructuralError("parameter slot " + std::to_string(k) + " is never used");
}

void apply_gate(StateVector& state, const Gate& gate, double angle) {
  check_gate(state.n_qubits(), gate);
  const auto n = state.n_qubits();
  auto amps = state.amplitudes();
  switch (gate.kind) {
    case GateKind::RY: kernels::apply_ry(amps, n, gate.qubits[0], angle); break;
    case GateKind::X: kernels::apply_x(amps, n, gate.qubits[0]); break;
    case GateKind::CNOT: kernels::apply_cnot(amps, n, gate.qubits[0], gate.qubits[1]); break;
    case GateKind::CZ: kernels::apply_cz(amps, n, gate.qubits[0], gate.qubits[1]); break;
  }
}

void apply_gate(StateVector& state, const Gate& gate) {
  if (gate.parameter) throw StructuralError("parametrized RY needs an explicit angle");
  apply_gate(state, gate, gate.angle);
}

void run_into(StateVector& state, const Circuit& circuit, std::span<const double> parameters) {
  if (parameters.size() != circuit.n_parameters())
    throw StructuralError("circuit takes " + std::to_string(circuit.n_parameters()) + " parameters, got " +
                          std::to_string(parameters.size()));
  if (state.n_qubits() != circuit.n_qubits()) throw StructuralError("state/circuit qubit count mismatch");
  state.reset();
  for (const auto& g : circuit.gates()) apply_gate(state, g, g.parameter ? parameters[*g.parameter] : g.angle);
}

StateVector run(const Circuit& circuit, std::span<const double> parameters) {
  StateVector state(circuit.n_qubits());
  run_into(state, circuit, parameters);
  return state;
}

std::vector<std::vector<std::size_t>> layers(const Circuit& circuit) {
  std::vector<std::size_t> frontier(circuit.n_qubits(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
    const auto& g = circuit.gates()[i];
    std::size_t layer = 0;
    for (auto q : g.targets()) layer = std::max(layer, frontier[q]);
    for (auto q : g.targets()) frontier[q] = layer + 1;
    if (out.size() <= layer) out.resize(layer + 1);
    out[layer].push_back(i);
  }
  return out;
}

std::size_t depth(const Circuit& circuit) { return layers(circuit).size(); }

std::string dump(const Circuit& circuit) {
  std::ostringstream out;
  const auto ls = layers(circuit);
  for (std::size_t k = 0; k < ls.size(); ++k) {
    out << "layer " << k << ":";
    for (auto i : ls[k]) {
      const auto& g = circuit.gates()[i];
      out << ' ' << to_string(g.kind) << '(' << g.qubits[0];
      if (g.arity() == 2) out << ',' << g.qubits[1];
      out << ')';
      if (g.kind == GateKind::RY) {
        if (g.parameter)
          out << "[#" << *g.parameter << ']';
        else
          out << '[' << g.angle << ']';
      }
    }
    out << '\n';
  }
  return out.str();
}

std::map<std::string, std::size_t> sample(const StateVector& state, std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw StructuralError("sampling needs at least one shot");
  std::vector<double> probs(state.dimension());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = std::norm(state[i]);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());
  std::vector<std::size_t> counts(probs.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) ++counts[dist(rng)];
  std::map<std::string, std::size_t> histogram;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) histogram[state.label(i)] = counts[i];
  return histogram;
}

}  // namespace cvqe
