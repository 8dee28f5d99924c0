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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <set>

#include "cvqe/ansatz.hpp"
#include "cvqe/errors.hpp"
#include "oracles.hpp"

namespace {

using namespace cvqe;

std::size_t cnot_count(const Circuit& c) {
  std::size_t k = 0;
  for (const auto& g : c.gates()) k += g.kind == GateKind::CNOT;
  return k;
}

TEST(Build, ParameterAndDepthLaw) {
  for (const auto& name : builtin_template_names()) {
    const std::size_t n = name == "unit2" ? 2 : name == "4q" ? 4 : 6;
    const auto t = builtin_template(name, n);
    for (int reps = 0; reps <= 8; ++reps) {
      const auto c = build(t, reps);
      EXPECT_EQ(c.n_parameters(), n * static_cast<std::size_t>(reps + 1)) << name << " reps=" << reps;
      EXPECT_EQ(depth(c), static_cast<std::size_t>(2 * reps + 1)) << name << " reps=" << reps;
      EXPECT_EQ(cnot_count(c), n / 2 * static_cast<std::size_t>(reps));
      EXPECT_NO_THROW(c.validate());
    }
  }
  EXPECT_EQ(build(builtin_template("4q", 4), 2).n_parameters(), 12u);
  EXPECT_EQ(build(builtin_template("A", 6), 2).n_parameters(), 18u);
  EXPECT_THROW(build(builtin_template("A", 6), -1), StructuralError);
}

TEST(Build, MeanFieldIsOneRotationLayer) {
  const auto c = build(builtin_template("C", 6), 0);
  ASSERT_EQ(c.gates().size(), 6u);
  for (std::size_t q = 0; q < 6; ++q) {
    EXPECT_EQ(c.gates()[q].kind, GateKind::RY);
    EXPECT_EQ(c.gates()[q].qubits[0], q);
    EXPECT_EQ(c.gates()[q].parameter, q);
  }
}

TEST(Build, LayersCycleEvenly) {
  for (const auto& name : {"A", "B", "C"}) {
    const auto t = builtin_template(name, 6);
    const std::size_t L = t.layers().size();
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto c = build(t, static_cast<int>(L * m));
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> uses;
      for (const auto& g : c.gates())
        if (g.kind == GateKind::CNOT) ++uses[{g.qubits[0], g.qubits[1]}];
      for (const auto& layer : t.layers())
        for (const auto& p : layer.pairs()) EXPECT_EQ((uses[{p.control, p.target}]), m) << name;
    }
  }
}

TEST(Build, BlockOrderFollowsTemplate) {
  const auto t = builtin_template("A", 6);
  const auto c = build(t, 3);
  std::vector<QubitPair> seen;
  for (const auto& g : c.gates())
    if (g.kind == GateKind::CNOT) seen.push_back({g.qubits[0], g.qubits[1]});
  ASSERT_EQ(seen.size(), 9u);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(seen[3 * k + j], t.layers()[k % 2].pairs()[j]);
}

TEST(Build, SlotsAreUnique) {
  const auto c = build(builtin_template("B", 6), 5);
  std::set<std::size_t> slots;
  for (const auto& g : c.gates())
    if (g.parameter) EXPECT_TRUE(slots.insert(*g.parameter).second);
  EXPECT_EQ(slots.size(), c.n_parameters());
  EXPECT_EQ(*slots.rbegin() + 1, c.n_parameters());
}

TEST(Templates, BuiltinsAreValidPairings) {
  for (const auto& name : {"A", "B", "C"}) {
    const auto t = builtin_template(name, 6);
    for (const auto& layer : t.layers()) {
      EXPECT_EQ(layer.pairs().size(), 3u);
      std::set<std::size_t> q;
      for (const auto& p : layer.pairs()) q.insert({p.control, p.target});
      EXPECT_EQ(q.size(), 6u);
    }
  }
  EXPECT_EQ(builtin_template("A", 6).layers().size(), 2u);
  EXPECT_EQ(builtin_template("B", 6).layers().size(), 3u);
  EXPECT_EQ(builtin_template("C", 6).layers().size(), 2u);
  EXPECT_EQ(builtin_template("B", 6).layers()[0], builtin_template("C", 6).layers()[0]);
}

TEST(Templates, PairingCount) {
  EXPECT_EQ(pairing_count(2), 1u);
  EXPECT_EQ(pairing_count(4), 3u);
  EXPECT_EQ(pairing_count(6), 15u);
  EXPECT_EQ(pairing_count(8), 105u);
  EXPECT_THROW(pairing_count(5), StructuralError);
  EXPECT_THROW(pairing_count(0), StructuralError);
}

TEST(Templates, Errors) {
  EXPECT_THROW(builtin_template("A", 4), StructuralError);
  EXPECT_THROW(builtin_template("Z", 6), StructuralError);
  EXPECT_THROW(PairingLayer({}), StructuralError);
  EXPECT_THROW(PairingLayer({{0, 0}}), StructuralError);
  EXPECT_THROW(PairingLayer({{0, 1}, {1, 2}}), StructuralError);
  EXPECT_THROW(custom_template(4, {PairingLayer({{0, 1}})}), StructuralError);  // qubits 2, 3 idle
  EXPECT_THROW(custom_template(2, {PairingLayer({{0, 2}})}), StructuralError);
  EXPECT_THROW(custom_template(2, {}), StructuralError);
  EXPECT_NO_THROW(custom_template(4, {PairingLayer({{0, 1}}), PairingLayer({{3, 2}})}));
}

TEST(Templates, ParseText) {
  const auto t = parse_template("# kekule\n0-1 2-3 4-5\n\n1-2 3-4 0-5  # closing bond\n", 6, "k");
  EXPECT_EQ(t.name(), "k");
  ASSERT_EQ(t.layers().size(), 2u);
  EXPECT_EQ(t.layers(), builtin_template("A", 6).layers());

  try {
    parse_template("0-1\n0-1 1-x\n", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_template("0-1\n\n0-1 1-0\n", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_template("01\n", 2), ParseError);
  EXPECT_THROW(parse_template("# nothing\n", 2), StructuralError);
}

TEST(Templates, ReadFile) {
  const auto path = std::filesystem::temp_directory_path() / "cvqe_test_ring4.txt";
  {
    std::ofstream f(path);
    f << "0-1 2-3\n1-2 3-0\n";
  }
  const auto t = read_template_file(path, 4);
  EXPECT_EQ(t.name(), "cvqe_test_ring4");
  EXPECT_EQ(t.layers().size(), 2u);
  std::filesystem::remove(path);
  EXPECT_THROW(read_template_file(path, 4), ParseError);
}

// The CNOT-closed cluster unit stays a finite distance from the identity for
// every pair of angles.
TEST(ClusterUnit, NeverTheIdentity) {
  Circuit unit(2);
  unit.add(Gate::ry_param(0, 0)).add(Gate::ry_param(1, 1)).add(Gate::cnot(0, 1));
  double closest = 1e9;
  std::vector<double> p(2);
  for (int i = 0; i < 360; ++i)
    for (int j = 0; j < 360; ++j) {
      p[0] = i * std::numbers::pi / 180;
      p[1] = j * std::numbers::pi / 180;
      double dist2 = 0;
      for (std::uint64_t col = 0; col < 4; ++col) {
        auto s = StateVector::basis(2, col);
        run_into(s, unit, p);
        for (std::uint64_t row = 0; row < 4; ++row) dist2 += std::norm(s[row] - cplx(row == col ? 1 : 0));
      }
      closest = std::min(closest, std::sqrt(dist2));
    }
  EXPECT_GE(closest, 1.0);
}

}  // namespace
