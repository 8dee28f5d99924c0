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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvqe/state.hpp"

namespace cvqe {

enum class GateKind { RY, X, CNOT, CZ };

/// One gate of the {RY, X, CNOT, CZ} set.
///
/// An RY either carries a fixed angle or names a variational parameter slot;
/// `angle` is ignored when `parameter` is set. For CNOT, qubits[0] is the
/// control and qubits[1] the target.
struct Gate {
  GateKind kind = GateKind::X;
  std::array<std::size_t, 2> qubits{};
  double angle = 0.0;
  std::optional<std::size_t> parameter;

  static Gate ry(std::size_t qubit, double angle);
  static Gate ry_param(std::size_t qubit, std::size_t slot);
  static Gate x(std::size_t qubit);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate cz(std::size_t a, std::size_t b);

  std::size_t arity() const noexcept { return kind == GateKind::CNOT || kind == GateKind::CZ ? 2 : 1; }
  std::span<const std::size_t> targets() const noexcept { return {qubits.data(), arity()}; }
};

std::string to_string(GateKind kind);

/// Ordered gate list on a fixed register.
class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);

  /// Appends after validating qubit indices (StructuralError otherwise).
  Circuit& add(const Gate& gate);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  bool empty() const noexcept { return gates_.empty(); }

  /// One past the largest parameter slot in use.
  std::size_t n_parameters() const noexcept { return n_parameters_; }

  /// Throws StructuralError if some slot in [0, n_parameters) is unused.
  void validate() const;

 private:
  std::size_t n_qubits_;
  std::vector<Gate> gates_;
  std::size_t n_parameters_ = 0;
};

/// Applies `gate` in place using its stored angle. Throws StructuralError
/// for out-of-range or repeated qubits, and for a parametrized RY.
void apply_gate(StateVector& state, const Gate& gate);

/// Same, with the RY angle supplied explicitly.
void apply_gate(StateVector& state, const Gate& gate, double angle);

/// Prepares |0...0>, applies every gate in order and returns the state.
StateVector run(const Circuit& circuit, std::span<const double> parameters);

/// Re-runs into an existing state (no allocation inside optimizer loops).
void run_into(StateVector& state, const Circuit& circuit, std::span<const double> parameters);

/// Greedy ASAP layering: each gate goes in the earliest layer after every
/// layer already touching its qubits. Returns gate indices per layer.
std::vector<std::vector<std::size_t>> layers(const Circuit& circuit);

std::size_t depth(const Circuit& circuit);

/// "layer k: GATE(qubits)[angle or param #]" per line.
std::string dump(const Circuit& circuit);

/// Multinomial draw of `shots` basis states from |amplitude|^2.
/// Keys are bitstrings with qubit 0 first; deterministic for a given seed.
std::map<std::string, std::size_t> sample(const StateVector& state, std::size_t shots,
                                          std::uint64_t seed);

}  // namespace cvqe
