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

#include "cvqe/ansatz.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cvqe/errors.hpp"

namespace cvqe {

PairingLayer::PairingLayer(std::vector<QubitPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw StructuralError("pairing layer is empty");
  std::set<std::size_t> seen;
  for (const auto& p : pairs_) {
    if (p.control == p.target)
      throw StructuralError("pair (" + std::to_string(p.control) + "," + std::to_string(p.target) +
                            ") pairs a qubit with itself");
    for (auto q : {p.control, p.target})
      if (!seen.insert(q).second)
        throw StructuralError("qubit " + std::to_string(q) + " appears in two pairs of one layer");
  }
}

std::size_t PairingLayer::max_qubit() const noexcept {
  std::size_t m = 0;
  for (const auto& p : pairs_) m = std::max({m, p.control, p.target});
  return m;
}

ClusterTemplate::ClusterTemplate(std::string name, std::size_t n_qubits, std::vector<PairingLayer> layers)
    : name_(std::move(name)), n_qubits_(n_qubits), layers_(std::move(layers)) {
  if (n_qubits_ < 2) throw StructuralError("cluster template needs at least two qubits");
  if (layers_.empty()) throw StructuralError("cluster template has no layers");
  std::vector<bool> covered(n_qubits_, false);
  for (const auto& layer : layers_) {
    if (layer.max_qubit() >= n_qubits_)
      throw StructuralError("template '" + name_ + "' pairs qubit " + std::to_string(layer.max_qubit()) +
                            " on " + std::to_string(n_qubits_) + " qubits");
    for (const auto& p : layer.pairs()) covered[p.control] = covered[p.target] = true;
  }
  for (std::size_t q = 0; q < n_qubits_; ++q)
    if (!covered[q]) throw StructuralError("template '" + name_ + "' never entangles qubit " + std::to_string(q));
}

Circuit build(const ClusterTemplate& cluster, int reps) {
  if (reps < 0) throw StructuralError("reps must be non-negative, got " + std::to_string(reps));
  const std::size_t n = cluster.n_qubits();
  const auto& ls = cluster.layers();
  Circuit circuit(n);
  std::size_t slot = 0;
  for (int k = 0; k < reps; ++k) {
    for (std::size_t q = 0; q < n; ++q) circuit.add(Gate::ry_param(q, slot++));
    for (const auto& p : ls[static_cast<std::size_t>(k) % ls.size()].pairs())
      circuit.add(Gate::cnot(p.control, p.target));
  }
  for (std::size_t q = 0; q < n; ++q) circuit.add(Gate::ry_param(q, slot++));
  return circuit;
}

Circuit build(const AnsatzSpec& spec) { return build(spec.cluster, spec.reps); }

namespace {

PairingLayer layer(std::initializer_list<QubitPair> pairs) { return PairingLayer(std::vector<QubitPair>(pairs)); }

}  // namespace

ClusterTemplate builtin_template(std::string_view name, std::size_t n_qubits) {
  auto expect = [&](std::size_t n) {
    if (n_qubits != n)
      throw StructuralError("template '" + std::string(name) + "' is defined on " + std::to_string(n) +
                            " qubits, requested " + std::to_string(n_qubits));
  };
  if (name == "unit2") {
    expect(2);
    return ClusterTemplate("unit2", 2, {layer({{0, 1}})});
  }
  if (name == "4q") {
    expect(4);
    return ClusterTemplate("4q", 4, {layer({{0, 1}, {2, 3}}), layer({{1, 2}, {0, 3}})});
  }
  if (name == "A") {
    expect(6);
    // Kekule: the two nearest-neighbour perfect matchings of the hexagon.
    return ClusterTemplate("A", 6, {layer({{0, 1}, {2, 3}, {4, 5}}), layer({{1, 2}, {3, 4}, {0, 5}})});
  }
  if (name == "B") {
    expect(6);
    // Dewar: each structure has one para bond plus two short bonds.
    return ClusterTemplate("B", 6,
                           {layer({{0, 5}, {1, 4}, {2, 3}}), layer({{0, 3}, {1, 2}, {4, 5}}),
                            layer({{0, 1}, {2, 5}, {3, 4}})});
  }
  if (name == "C") {
    expect(6);
    return ClusterTemplate("C", 6, {layer({{0, 5}, {1, 4}, {2, 3}}), layer({{0, 3}, {1, 2}, {4, 5}})});
  }
  throw StructuralError("unknown cluster template '" + std::string(name) + "'");
}

std::vector<std::string> builtin_template_names() { return {"unit2", "4q", "A", "B", "C"}; }

std::uint64_t pairing_count(std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits % 2 != 0)
    throw StructuralError("pairing count needs an even, positive qubit count");
  // (2w)! / (2^w w!) = (2w-1)!!
  std::uint64_t count = 1;
  for (std::uint64_t k = n_qubits - 1; k > 1; k -= 2) count *= k;
  return count;
}

ClusterTemplate custom_template(std::size_t n_qubits, std::vector<PairingLayer> layers, std::string name) {
  return ClusterTemplate(std::move(name), n_qubits, std::move(layers));
}

ClusterTemplate parse_template(std::string_view text, std::size_t n_qubits, std::string name,
                               std::string_view source) {
  const std::string src(source);
  std::vector<PairingLayer> layers;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::string tok;
    std::vector<QubitPair> pairs;
    while (tokens >> tok) {
      const auto dash = tok.find('-');
      if (dash == std::string::npos) throw ParseError(src, line_no, "expected 'c-t', got '" + tok + "'");
      auto parse_index = [&](std::string_view s) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
          throw ParseError(src, line_no, "bad qubit index '" + std::string(s) + "'");
        return v;
      };
      const std::string_view t(tok);
      pairs.push_back({parse_index(t.substr(0, dash)), parse_index(t.substr(dash + 1))});
    }
    if (pairs.empty()) continue;
    try {
      layers.emplace_back(std::move(pairs));
    } catch (const StructuralError& e) {
      throw ParseError(src, line_no, e.what());
    }
  }
  return custom_template(n_qubits, std::move(layers), std::move(name));
}

ClusterTemplate read_template_file(const std::filesystem::path& path, std::size_t n_qubits) {
  std::ifstream f(path);
  if (!f) throw ParseError(path.string(), 0, "cannot open file");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_template(buf.str(), n_qubits, path.stem().string(), path.string());
}

}  // namespace cvqe
