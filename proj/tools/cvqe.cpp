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

// Command-line driver: Ising sweeps, molecular points and curves, ledgers.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvqe/ansatz.hpp"
#include "cvqe/errors.hpp"
#include "cvqe/simulator.hpp"
#include "cvqe/sweep.hpp"

namespace {

struct Common {
  std::string cluster;
  int reps = 1;
  int restarts = 10;
  std::uint64_t seed = 0;
  std::string strategy = "default";
  std::optional<double> anchor;
  int max_iter = 200;
  std::optional<std::size_t> shots;
  std::string output;
  std::string format = "csv";

  cvqe::VqeOptions options() const {
    cvqe::VqeOptions o;
    o.max_iterations = max_iter;
    o.restarts = restarts;
    o.seed = seed;
    o.strategy = cvqe::parse_strategy(strategy);
    o.shots = shots;
    return o;
  }
};

void add_common(CLI::App* app, Common& c, bool with_anchor) {
  app->add_option("--cluster", c.cluster, "Builtin template (unit2, 4q, A, B, C) or a template file");
  app->add_option("--reps", c.reps, "Entangling repetitions")->check(CLI::NonNegativeNumber);
  app->add_option("--restarts", c.restarts, "Random restarts per point")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "Seed for restart streams");
  app->add_option("--strategy", c.strategy, "default or adiabatic")
      ->check(CLI::IsMember({"default", "adiabatic"}));
  if (with_anchor) app->add_option("--anchor", c.anchor, "Model parameter the adiabatic walk starts from");
  app->add_option("--max-iter", c.max_iter, "Optimizer iterations per minimization")->check(CLI::PositiveNumber);
  app->add_option("--shots", c.shots, "Sample each Pauli term with this many shots");
  app->add_option("--output", c.output, "Write here instead of stdout");
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

std::string default_cluster(std::size_t n_qubits) {
  switch (n_qubits) {
    case 2: return "unit2";
    case 4: return "4q";
    default: return "C";
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

int finish(const std::vector<cvqe::SweepRecord>& records, const Common& c) {
  emit(c.format == "json" ? cvqe::render_json(records) : cvqe::render_csv(records), c.output);
  bool failed = false;
  for (const auto& r : records)
    if (r.failed()) {
      std::cerr << "point " << r.system << " " << r.model_param << " failed: " << r.error << "\n";
      failed = true;
    }
  return failed ? 2 : 0;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster-ansatz VQE experiments"};
  app.require_subcommand(1);

  Common ising_opts;
  std::size_t sites = 6;
  std::string topology = "ring";
  std::string grid = "0:1:0.1";
  auto* ising = app.add_subcommand("ising", "Transverse-field Ising sweep with h = a, J = a - 1");
  ising->add_option("--sites", sites, "Number of spins")->check(CLI::Range(2, 26));
  ising->add_option("--topology", topology, "chain or ring")->check(CLI::IsMember({"chain", "ring"}));
  ising->add_option("--grid", grid, "a values as start:stop:step or a comma list");
  add_common(ising, ising_opts, true);

  Common mol_opts;
  std::string mol_path, mol_mapping;
  auto* molecule = app.add_subcommand("molecule", "One molecular Hamiltonian");
  molecule->add_option("path", mol_path, "<system>_<param>.fcidump or .pauli")->required()->check(CLI::ExistingFile);
  molecule->add_option("--mapping", mol_mapping, "jw, parity, parity_reduced or pauli_file");
  add_common(molecule, mol_opts, false);

  Common curve_opts;
  std::string curve_dir, curve_mapping;
  auto* curve = app.add_subcommand("curve", "Every Hamiltonian in a directory, by geometry");
  curve->add_option("directory", curve_dir, "Directory of <system>_<param> files")
      ->required()
      ->check(CLI::ExistingDirectory);
  curve->add_option("--mapping", curve_mapping, "jw, parity, parity_reduced or pauli_file");
  add_common(curve, curve_opts, true);

  std::vector<std::string> report_inputs;
  std::string report_format = "text";
  std::string report_output;
  auto* report = app.add_subcommand("report", "Ledger of delta_Ec per system and cluster from CSV results");
  report->add_option("inputs", report_inputs, "CSV files written by the other subcommands")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--format", report_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  report->add_option("--output", report_output, "Write here instead of stdout");

  std::size_t circuit_qubits = 6;
  std::string circuit_cluster = "A";
  int circuit_reps = 1;
  auto* circuit = app.add_subcommand("circuit", "Print the layered ansatz circuit");
  circuit->add_option("--sites", circuit_qubits, "Number of qubits");
  circuit->add_option("--cluster", circuit_cluster, "Template name or file");
  circuit->add_option("--reps", circuit_reps, "Entangling repetitions")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ising->parsed()) {
      if (ising_opts.cluster.empty()) ising_opts.cluster = sites == 6 ? "A" : default_cluster(sites);
      const auto records =
          cvqe::ising_sweep(sites, cvqe::parse_topology(topology), cvqe::resolve_template(ising_opts.cluster, sites),
                            ising_opts.reps, cvqe::parse_grid(grid), ising_opts.options(), ising_opts.anchor);
      return finish(records, ising_opts);
    }
    if (molecule->parsed()) {
      const std::filesystem::path path(mol_path);
      const auto mapping = mol_mapping.empty()
                               ? (path.extension() == ".pauli" ? cvqe::Mapping::PauliFile : cvqe::Mapping::JordanWigner)
                               : cvqe::parse_mapping(mol_mapping);
      if (mol_opts.cluster.empty())
        mol_opts.cluster = default_cluster(cvqe::load_hamiltonian(path, mapping).n_qubits());
      return finish({cvqe::molecule_run(path, mapping, mol_opts.cluster, mol_opts.reps, mol_opts.options())},
                    mol_opts);
    }
    if (curve->parsed()) {
      cvqe::Mapping mapping = cvqe::Mapping::JordanWigner;
      if (!curve_mapping.empty()) {
        mapping = cvqe::parse_mapping(curve_mapping);
      } else {
        for (const auto& e : std::filesystem::directory_iterator(curve_dir))
          if (e.path().extension() == ".pauli") mapping = cvqe::Mapping::PauliFile;
      }
      if (curve_opts.cluster.empty()) {
        for (const auto& e : std::filesystem::directory_iterator(curve_dir)) {
          const bool fits = mapping == cvqe::Mapping::PauliFile ? e.path().extension() == ".pauli"
                                                               : e.path().extension() == ".fcidump";
          if (!fits) continue;
          curve_opts.cluster = default_cluster(cvqe::load_hamiltonian(e.path(), mapping).n_qubits());
          break;
        }
      }
      return finish(cvqe::curve_run(curve_dir, mapping, curve_opts.cluster, curve_opts.reps, curve_opts.options(),
                                    curve_opts.anchor),
                    curve_opts);
    }
    if (report->parsed()) {
      std::vector<cvqe::SweepRecord> records;
      for (const auto& in : report_inputs) {
        auto part = cvqe::parse_csv(read_text(in), in);
        records.insert(records.end(), part.begin(), part.end());
      }
      emit(cvqe::report_table(records, report_format == "csv" ? cvqe::TableFormat::Csv : cvqe::TableFormat::Text),
           report_output);
      return 0;
    }
    if (circuit->parsed()) {
      const auto c = cvqe::build(cvqe::resolve_template(circuit_cluster, circuit_qubits), circuit_reps);
      std::cout << "qubits=" << c.n_qubits() << " parameters=" << c.n_parameters() << " depth=" << cvqe::depth(c)
                << "\n"
                << cvqe::dump(c);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
