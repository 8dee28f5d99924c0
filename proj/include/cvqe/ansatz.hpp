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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cvqe/simulator.hpp"

namespace cvqe {

/// One cluster unit's entangler: CNOT from `control` to `target`.
struct QubitPair {
  std::size_t control = 0;
  std::size_t target = 0;

  bool operator==(const QubitPair&) const = default;
};

/// A set of disjoint qubit pairs, i.e. one valence-bond configuration.
class PairingLayer {
 public:
  /// Throws StructuralError if a pair repeats a qubit or two pairs overlap.
  explicit PairingLayer(std::vector<QubitPair> pairs);

  const std::vector<QubitPair>& pairs() const noexcept { return pairs_; }
  std::size_t max_qubit() const noexcept;

  bool operator==(const PairingLayer&) const = default;

 private:
  std::vector<QubitPair> pairs_;
};

/// Ordered resonance scheme. Layers are cycled when the requested number of
/// repetitions exceeds their count.
class ClusterTemplate {
 public:
  /// Validates index bounds and that every qubit is entangled somewhere.
  ClusterTemplate(std::string name, std::size_t n_qubits, std::vector<PairingLayer> layers);

  const std::string& name() const noexcept { return name_; }
  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PairingLayer>& layers() const noexcept { return layers_; }

 private:
  std::string name_;
  std::size_t n_qubits_;
  std::vector<PairingLayer> layers_;
};

struct AnsatzSpec {
  ClusterTemplate cluster;
  int reps = 0;
};

/// Full cluster circuit.
///
/// reps = 0 is a single parametrized RY layer (the mean-field circuit).
/// Otherwise each of the `reps` blocks is an RY layer followed by the CNOTs
/// of template layer (k mod L), and a final RY layer closes the circuit.
/// Slots are numbered qubit-major within each rotation layer, so the circuit
/// has n_qubits * (reps + 1) parameters and depth 2 * reps + 1.
Circuit build(const AnsatzSpec& spec);
Circuit build(const ClusterTemplate& cluster, int reps);

/// Names: "unit2" (2 qubits), "4q" (4), "A" Kekule, "B" Dewar, "C" reduced
/// Dewar (6 each).
ClusterTemplate builtin_template(std::string_view name, std::size_t n_qubits);

/// Names accepted by builtin_template().
std::vector<std::string> builtin_template_names();

/// (2w)! / (2^w w!) perfect pairings of 2w qubits.
std::uint64_t pairing_count(std::size_t n_qubits);

ClusterTemplate custom_template(std::size_t n_qubits, std::vector<PairingLayer> layers,
                                std::string name = "custom");

// Template text: one layer per line, pairs "c-t" separated by spaces,
// '#' starts a comment.
ClusterTemplate parse_template(std::string_view text, std::size_t n_qubits, std::string name = "custom",
                               std::string_view source = "<string>");
ClusterTemplate read_template_file(const std::filesystem::path& path, std::size_t n_qubits);

}  // namespace cvqe
