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

#include "cvqe/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "cvqe/errors.hpp"
#include "cvqe/fermion.hpp"
#include "cvqe/simulator.hpp"
#include "cvqe/solver.hpp"

namespace cvqe {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

SweepRecord base_record(std::string system, double param, const std::string& cluster, int reps,
                        std::size_t n_qubits, const VqeOptions& options) {
  SweepRecord r;
  r.system = std::move(system);
  r.model_param = param;
  r.cluster = cluster;
  r.reps = reps;
  r.depth = 2 * reps + 1;
  r.n_params = static_cast<int>(n_qubits) * (reps + 1);
  r.restarts = options.restarts;
  r.seed = options.seed;
  r.strategy = std::string(to_string(options.strategy));
  return r;
}

void fill(SweepRecord& r, const VqeResult& result, double exact) {
  r.E_vqe = result.energy;
  r.E_exact = exact;
  r.delta_Ec = correlation_energy(exact, result.energy);
}

void mark_failed(SweepRecord& r, const std::string& why) {
  r.E_vqe = r.E_exact = r.delta_Ec = kNaN;
  r.error = why;
}

std::size_t nearest(const std::vector<double>& keys, double target) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < keys.size(); ++i)
    if (std::abs(keys[i] - target) < std::abs(keys[best] - target)) best = i;
  return best;
}

// Solves a path of Hamiltonians and fills the matching records; a failure
// in the adiabatic chain fails the whole chain, independent points fail alone.
void run_path(std::vector<SweepRecord>& records, const std::vector<std::optional<Observable>>& hams,
              const AnsatzSpec& spec, const VqeOptions& options, std::optional<double> anchor) {
  const std::size_t n = records.size();
  std::vector<double> exact(n, kNaN);
  for (std::size_t i = 0; i < n; ++i) {
    if (!hams[i]) continue;
    try {
      exact[i] = ground_energy(*hams[i]);
    } catch (const std::exception& e) {
      mark_failed(records[i], e.what());
    }
  }

  if (options.strategy == Strategy::Default) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
      if (!hams[i] || std::isnan(exact[i])) continue;
      try {
        fill(records[i], solve(VqeProblem(*hams[i], spec, options)), exact[i]);
      } catch (const std::exception& e) {
        mark_failed(records[i], e.what());
      }
    }
    return;
  }

  std::vector<Observable> path;
  std::vector<std::size_t> index;
  std::vector<double> keys, path_exact;
  for (std::size_t i = 0; i < n; ++i) {
    if (!hams[i] || std::isnan(exact[i])) continue;
    path.push_back(*hams[i]);
    index.push_back(i);
    keys.push_back(records[i].model_param);
    path_exact.push_back(exact[i]);
  }
  if (path.empty()) return;
  const std::size_t a = anchor ? nearest(keys, *anchor)
                               : static_cast<std::size_t>(std::min_element(path_exact.begin(), path_exact.end()) -
                                                          path_exact.begin());
  try {
    const auto results = solve_path(path, spec, options, a);
    for (std::size_t k = 0; k < path.size(); ++k) fill(records[index[k]], results[k], path_exact[k]);
  } catch (const std::exception& e) {
    for (auto i : index) mark_failed(records[i], e.what());
  }
}

bool same_extension(const std::filesystem::path& p, Mapping m) {
  const auto ext = p.extension().string();
  return m == Mapping::PauliFile ? ext == ".pauli" : ext == ".fcidump";
}

}  // namespace

bool SweepRecord::failed() const noexcept { return std::isnan(E_vqe); }

std::string render_csv(const std::vector<SweepRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    for (const auto* label : {&r.system, &r.cluster, &r.strategy})
      if (label->find_first_of(",\n\"") != std::string::npos)
        throw StructuralError("label '" + *label + "' cannot be written to CSV");
    out += r.system + ',' + format_real(r.model_param) + ',' + r.cluster + ',' + std::to_string(r.reps) + ',' +
           std::to_string(r.depth) + ',' + std::to_string(r.n_params) + ',' + format_real(r.E_vqe) + ',' +
           format_real(r.E_exact) + ',' + format_real(r.delta_Ec) + ',' + std::to_string(r.restarts) + ',' +
           std::to_string(r.seed) + ',' + r.strategy + '\n';
  }
  return out;
}

std::vector<SweepRecord> parse_csv(std::string_view text, std::string_view source) {
  const std::string src(source);
  std::vector<SweepRecord> out;
  std::size_t line_no = 0;
  bool header = false;
  for (auto line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!header) {
      if (line != kCsvHeader) throw ParseError(src, line_no, "unexpected CSV header");
      header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 12) throw ParseError(src, line_no, "expected 12 fields, got " + std::to_string(f.size()));
    SweepRecord r;
    r.system = std::string(trim(f[0]));
    r.cluster = std::string(trim(f[2]));
    r.strategy = std::string(trim(f[11]));
    const bool ok = parse_number(f[1], r.model_param) && parse_number(f[3], r.reps) &&
                    parse_number(f[4], r.depth) && parse_number(f[5], r.n_params) && parse_number(f[6], r.E_vqe) &&
                    parse_number(f[7], r.E_exact) && parse_number(f[8], r.delta_Ec) &&
                    parse_number(f[9], r.restarts) && parse_number(f[10], r.seed);
    if (!ok) throw ParseError(src, line_no, "malformed numeric field");
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_json(const std::vector<SweepRecord>& records) {
  auto real = [](double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"system", r.system},     {"model_param", r.model_param},
                     {"cluster", r.cluster},   {"reps", r.reps},
                     {"depth", r.depth},       {"n_params", r.n_params},
                     {"E_vqe", real(r.E_vqe)}, {"E_exact", real(r.E_exact)},
                     {"delta_Ec", real(r.delta_Ec)}, {"restarts", r.restarts},
                     {"seed", r.seed},         {"strategy", r.strategy}};
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  const std::string whole(text);
  if (text.find(':') != std::string_view::npos) {
    const auto f = split(text, ':');
    double start = 0, stop = 0, step = 0;
    if (f.size() != 3 || !parse_number(f[0], start) || !parse_number(f[1], stop) || !parse_number(f[2], step))
      throw StructuralError("grid '" + whole + "' is not start:stop:step");
    if (step <= 0 || stop < start) throw StructuralError("grid '" + whole + "' needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    // Rounded to 12 decimals so 0.1 steps print as 0.3, not 0.30000000000000004.
    for (std::size_t i = 0; i < count; ++i) out[i] = std::round((start + i * step) * 1e12) / 1e12;
    return out;
  }
  std::vector<double> out;
  for (auto tok : split(text, ',')) {
    double v = 0;
    if (!parse_number(tok, v)) throw StructuralError("grid '" + whole + "' has a non-numeric entry");
    out.push_back(v);
  }
  return out;
}

Mapping parse_mapping(std::string_view name) {
  if (name == "jw") return Mapping::JordanWigner;
  if (name == "parity") return Mapping::Parity;
  if (name == "parity_reduced") return Mapping::ParityReduced;
  if (name == "pauli_file") return Mapping::PauliFile;
  throw StructuralError("unknown mapping '" + std::string(name) + "' (jw, parity, parity_reduced, pauli_file)");
}

std::string_view to_string(Mapping m) {
  switch (m) {
    case Mapping::JordanWigner: return "jw";
    case Mapping::Parity: return "parity";
    case Mapping::ParityReduced: return "parity_reduced";
    case Mapping::PauliFile: return "pauli_file";
  }
  return "?";
}

Observable load_hamiltonian(const std::filesystem::path& path, Mapping mapping) {
  if (!same_extension(path, mapping))
    throw StructuralError("mapping " + std::string(to_string(mapping)) + " does not apply to " + path.string());
  if (mapping == Mapping::PauliFile) return read_pauli_file(path);
  const auto data = read_fcidump(path);
  const auto op = to_fermion_hamiltonian(data);
  switch (mapping) {
    case Mapping::JordanWigner: return jordan_wigner(op);
    case Mapping::Parity: return parity_map(op);
    default: return parity_map(op, ParityReduction{data.n_electrons(), data.ms2()});
  }
}

std::pair<std::string, double> geometry_key(const std::filesystem::path& path) {
  const auto stem = path.stem().string();
  const auto us = stem.rfind('_');
  double v = 0;
  if (us == std::string::npos || us == 0 || !parse_number(std::string_view(stem).substr(us + 1), v))
    throw StructuralError("file name '" + path.filename().string() + "' is not <system>_<param>.<ext>");
  return {stem.substr(0, us), v};
}

ClusterTemplate resolve_template(const std::string& cluster, std::size_t n_qubits) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(cluster, ec)) return read_template_file(cluster, n_qubits);
  return builtin_template(cluster, n_qubits);
}

std::vector<SweepRecord> ising_sweep(std::size_t n_sites, Topology topology, const ClusterTemplate& cluster,
                                     int reps, const std::vector<double>& a_grid, const VqeOptions& options,
                                     std::optional<double> anchor) {
  if (cluster.n_qubits() != n_sites)
    throw StructuralError("template " + cluster.name() + " has " + std::to_string(cluster.n_qubits()) +
                          " qubits, model has " + std::to_string(n_sites) + " sites");
  auto grid = a_grid;
  std::sort(grid.begin(), grid.end());
  const std::string system = "ising" + std::to_string(n_sites) + "_" + std::string(to_string(topology));
  std::vector<SweepRecord> records;
  std::vector<std::optional<Observable>> hams;
  for (double a : grid) {
    records.push_back(base_record(system, a, cluster.name(), reps, n_sites, options));
    try {
      hams.emplace_back(build_ising(SweepParam{a}.ising(n_sites, topology)));
    } catch (const std::exception& e) {
      hams.emplace_back();
      mark_failed(records.back(), e.what());
    }
  }
  run_path(records, hams, AnsatzSpec{cluster, reps}, options, anchor);
  return records;
}

SweepRecord molecule_run(const std::filesystem::path& path, Mapping mapping, const std::string& cluster, int reps,
                         const VqeOptions& options) {
  auto [system, param] = geometry_key(path);
  const auto h = load_hamiltonian(path, mapping);
  SweepRecord r = base_record(system, param, cluster, reps, h.n_qubits(), options);
  std::vector<SweepRecord> one{r};
  VqeOptions single = options;
  single.strategy = Strategy::Default;
  one[0].strategy = std::string(to_string(Strategy::Default));
  run_path(one, {h}, AnsatzSpec{resolve_template(cluster, h.n_qubits()), reps}, single, std::nullopt);
  return one[0];
}

std::vector<SweepRecord> curve_run(const std::filesystem::path& directory, Mapping mapping,
                                   const std::string& cluster, int reps, const VqeOptions& options,
                                   std::optional<double> anchor) {
  std::vector<std::pair<double, std::filesystem::path>> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory))
    if (entry.is_regular_file() && same_extension(entry.path(), mapping))
      files.emplace_back(geometry_key(entry.path()).second, entry.path());
  if (files.empty())
    throw StructuralError("no " + std::string(to_string(mapping)) + " inputs in " + directory.string());
  std::sort(files.begin(), files.end());

  std::vector<SweepRecord> records;
  std::vector<std::optional<Observable>> hams;
  std::optional<std::size_t> width;
  for (const auto& [param, path] : files) {
    const auto system = geometry_key(path).first;
    try {
      auto h = load_hamiltonian(path, mapping);
      if (width && *width != h.n_qubits())
        throw StructuralError(path.filename().string() + " has " + std::to_string(h.n_qubits()) +
                              " qubits, earlier files " + std::to_string(*width));
      width = h.n_qubits();
      records.push_back(base_record(system, param, cluster, reps, h.n_qubits(), options));
      hams.emplace_back(std::move(h));
    } catch (const std::exception& e) {
      records.push_back(base_record(system, param, cluster, reps, width.value_or(0), options));
      mark_failed(records.back(), e.what());
      hams.emplace_back();
    }
  }
  if (!width) throw StructuralError("no Hamiltonian in " + directory.string() + " could be loaded");
  run_path(records, hams, AnsatzSpec{resolve_template(cluster, *width), reps}, options, anchor);
  return records;
}

std::string report_table(const std::vector<SweepRecord>& records, TableFormat format) {
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, std::vector<const SweepRecord*>> blocks;
  for (const auto& r : records) {
    const auto key = std::make_pair(r.system, r.cluster);
    if (!blocks.count(key)) order.push_back(key);
    blocks[key].push_back(&r);
  }
  std::string out;
  if (format == TableFormat::Csv && !records.empty()) out += "system,cluster,model_param,reps,depth,delta_Ec\n";
  char buf[160];
  for (const auto& key : order) {
    auto rows = blocks[key];
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRecord* a, const SweepRecord* b) {
      return std::tie(a->model_param, a->reps) < std::tie(b->model_param, b->reps);
    });
    if (format == TableFormat::Csv) {
      for (const auto* r : rows)
        out += r->system + ',' + r->cluster + ',' + format_real(r->model_param) + ',' + std::to_string(r->reps) +
               ',' + std::to_string(r->depth) + ',' + format_real(r->delta_Ec) + '\n';
      continue;
    }
    if (!out.empty()) out += '\n';
    out += key.first + "  cluster " + key.second + "\n";
    std::snprintf(buf, sizeof(buf), "%12s %5s %6s %12s\n", "param", "reps", "depth", "delta_Ec");
    out += buf;
    for (const auto* r : rows) {
      if (r->failed())
        std::snprintf(buf, sizeof(buf), "%12g %5d %6d %12s\n", r->model_param, r->reps, r->depth, "failed");
      else
        std::snprintf(buf, sizeof(buf), "%12g %5d %6d %12.5f\n", r->model_param, r->reps, r->depth, r->delta_Ec);
      out += buf;
    }
  }
  return out;
}

}  // namespace cvqe
