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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvqe/ansatz.hpp"
#include "cvqe/models.hpp"
#include "cvqe/pauli.hpp"
#include "cvqe/vqe.hpp"

namespace cvqe {

/// One row of an experiment ledger. A failed point keeps its labels and has
/// NaN energies; `error` is informational and is not serialized.
struct SweepRecord {
  std::string system;
  double model_param = 0.0;
  std::string cluster;
  int reps = 0;
  int depth = 0;
  int n_params = 0;
  double E_vqe = 0.0;
  double E_exact = 0.0;
  double delta_Ec = 0.0;
  int restarts = 0;
  std::uint64_t seed = 0;
  std::string strategy;
  std::string error;

  bool failed() const noexcept;
};

inline constexpr std::string_view kCsvHeader =
    "system,model_param,cluster,reps,depth,n_params,E_vqe,E_exact,delta_Ec,restarts,seed,strategy";

/// Reals use the shortest round-trip representation; failed values are "nan".
std::string render_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_csv(std::string_view text, std::string_view source = "<string>");
std::string render_json(const std::vector<SweepRecord>& records);

/// "start:stop:step" (stop inclusive up to rounding), a single value, or a
/// comma-separated list.
std::vector<double> parse_grid(std::string_view text);

enum class Mapping { JordanWigner, Parity, ParityReduced, PauliFile };

Mapping parse_mapping(std::string_view name);
std::string_view to_string(Mapping m);

/// Loads a Hamiltonian: FCIDUMP files go through the fermion mappings, Pauli
/// files are read as they are. Throws StructuralError if the mapping does not
/// fit the file extension (.fcidump or .pauli).
Observable load_hamiltonian(const std::filesystem::path& path, Mapping mapping);

/// Splits "<system>_<param>.<ext>" into its parts.
std::pair<std::string, double> geometry_key(const std::filesystem::path& path);

/// Template named `cluster` for n qubits, or a template file when `cluster`
/// names an existing path.
ClusterTemplate resolve_template(const std::string& cluster, std::size_t n_qubits);

std::vector<SweepRecord> ising_sweep(std::size_t n_sites, Topology topology, const ClusterTemplate& cluster,
                                     int reps, const std::vector<double>& a_grid, const VqeOptions& options,
                                     std::optional<double> anchor = std::nullopt);

SweepRecord molecule_run(const std::filesystem::path& path, Mapping mapping, const std::string& cluster, int reps,
                         const VqeOptions& options);

/// Every file in `directory` whose extension fits `mapping`, in ascending
/// geometry order. The adiabatic anchor is the file closest to `anchor`, or
/// the point with the lowest exact energy when no anchor is given.
std::vector<SweepRecord> curve_run(const std::filesystem::path& directory, Mapping mapping,
                                   const std::string& cluster, int reps, const VqeOptions& options,
                                   std::optional<double> anchor = std::nullopt);

enum class TableFormat { Text, Csv };

/// One block per (system, cluster) in first-seen order; rows sorted by
/// (model_param, reps) with depth and delta_Ec.
std::string report_table(const std::vector<SweepRecord>& records, TableFormat format = TableFormat::Text);

}  // namespace cvqe
