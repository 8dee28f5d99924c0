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

#include <cmath>
#include <numbers>

#include "cvqe/ansatz.hpp"
#include "cvqe/errors.hpp"
#include "cvqe/models.hpp"
#include "cvqe/simulator.hpp"
#include "cvqe/solver.hpp"
#include "oracles.hpp"

namespace {

using namespace cvqe;
using std::numbers::pi;

std::vector<double> a_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 20; ++k) g.push_back(0.05 * k);
  return g;
}

TEST(Ising, TermsAndBonds) {
  const auto h = build_ising({2, Topology::Chain, -0.5, 0.5});
  EXPECT_DOUBLE_EQ(h.coefficient(PauliString::from_string("ZZ")), 0.5);
  EXPECT_DOUBLE_EQ(h.coefficient(PauliString::from_string("XI")), -0.5);
  EXPECT_DOUBLE_EQ(h.coefficient(PauliString::from_string("IX")), -0.5);

  EXPECT_EQ(ising_bonds(2, Topology::Ring).size(), 1u);
  EXPECT_EQ(ising_bonds(6, Topology::Ring).size(), 6u);
  EXPECT_EQ(ising_bonds(6, Topology::Chain).size(), 5u);
  EXPECT_EQ(ising_bonds(6, Topology::Ring).back(), (std::pair<std::size_t, std::size_t>{5, 0}));
  EXPECT_THROW(ising_bonds(1, Topology::Chain), StructuralError);
  EXPECT_THROW(build_ising(3, {{0, 3, 1.0}}, 0.0), StructuralError);
  EXPECT_THROW(build_ising(3, {{1, 1, 1.0}}, 0.0), StructuralError);
}

TEST(Ising, TopologyNames) {
  EXPECT_EQ(parse_topology("ring"), Topology::Ring);
  EXPECT_EQ(parse_topology("chain"), Topology::Chain);
  EXPECT_EQ(to_string(Topology::Ring), "ring");
  EXPECT_THROW(parse_topology("torus"), StructuralError);
}

TEST(Ising, SweepParam) {
  const SweepParam p{0.3};
  EXPECT_DOUBLE_EQ(p.J(), -0.7);
  EXPECT_DOUBLE_EQ(p.h(), 0.3);
  const auto spec = p.ising(6, Topology::Ring);
  EXPECT_EQ(spec.n_sites, 6u);
  EXPECT_DOUBLE_EQ(spec.J, -0.7);
}

TEST(TwoSite, ClosedFormMatchesDiagonalization) {
  for (double a : a_grid()) {
    const SweepParam p{a};
    const double exact = ground_energy(build_ising(p.ising(2, Topology::Chain)));
    EXPECT_NEAR(exact_2site_energy(p.J(), p.h()), exact, 1e-12) << "a=" << a;
  }
  EXPECT_NEAR(exact_2site_energy(-0.5, 0.5), -1.118033988749895, 1e-15);
  EXPECT_DOUBLE_EQ(exact_2site_energy(-1, 0), -1.0);
  EXPECT_DOUBLE_EQ(exact_2site_energy(0, 1), -2.0);
}

TEST(TwoSite, MeanFieldExamples) {
  EXPECT_DOUBLE_EQ(meanfield_2site_energy(-1, 0), -1.0);
  EXPECT_DOUBLE_EQ(meanfield_2site_energy(0, 1), -2.0);
  EXPECT_DOUBLE_EQ(meanfield_2site_energy(-0.5, 0.5), -1.0);
  EXPECT_NEAR(meanfield_2site_energy(-0.8, 0.2), -0.85, 1e-15);
}

TEST(TwoSite, MeanFieldBoundsExactWithEqualityAtEnds) {
  for (double a : a_grid()) {
    const SweepParam p{a};
    const double mf = meanfield_2site_energy(p.J(), p.h());
    const double ex = exact_2site_energy(p.J(), p.h());
    EXPECT_GE(mf, ex - 1e-15) << "a=" << a;
    if (a == 0.0 || a == 1.0)
      EXPECT_NEAR(mf, ex, 1e-15);
    else
      EXPECT_GT(mf - ex, 1e-6) << "a=" << a;
  }
}

TEST(TwoSite, MeanFieldIsContinuousAtTheBranchPoint) {
  const double below = meanfield_2site_energy(SweepParam{0.5 - 1e-9}.J(), 0.5 - 1e-9);
  const double above = meanfield_2site_energy(SweepParam{0.5 + 1e-9}.J(), 0.5 + 1e-9);
  EXPECT_NEAR(below, above, 1e-7);
}

TEST(TwoSite, MeanFieldAnglesAttainTheEnergy) {
  const auto mf = build(builtin_template("unit2", 2), 0);
  for (double a : a_grid()) {
    const SweepParam p{a};
    const auto [t0, t1] = meanfield_2site_angles(p.J(), p.h());
    const std::vector<double> angles{t0, t1};
    const double e = expectation(run(mf, angles), build_ising(p.ising(2, Topology::Chain)));
    EXPECT_NEAR(e, meanfield_2site_energy(p.J(), p.h()), 1e-12) << "a=" << a;
  }
}

TEST(TwoSite, MeanFieldIsTheProductStateMinimum) {
  // Brute force over a fine product-state grid.
  for (double a : {0.1, 0.4, 0.7}) {
    const SweepParam p{a};
    double best = 1e9;
    for (int i = 0; i < 400; ++i)
      for (int j = 0; j < 400; ++j) {
        const double t0 = 2 * pi * i / 400, t1 = 2 * pi * j / 400;
        const double e = -p.J() * std::cos(t0) * std::cos(t1) - p.h() * (std::sin(t0) + std::sin(t1));
        best = std::min(best, e);
      }
    EXPECT_NEAR(best, meanfield_2site_energy(p.J(), p.h()), 1e-3);
    EXPECT_GE(best, meanfield_2site_energy(p.J(), p.h()) - 1e-12);
  }
}

TEST(TwoSite, AngleExamples) {
  EXPECT_NEAR(exact_2site_angle(0, 1), pi / 4, 1e-15);
  EXPECT_NEAR(exact_2site_angle(-1, 0), pi / 2, 1e-15);
  EXPECT_NEAR(exact_2site_angle(1, 0), 0.0, 1e-15);
}

TEST(TwoSite, AngleFedToClusterUnitGivesGroundState) {
  const auto c = build(builtin_template("unit2", 2), 1);
  for (double a : a_grid()) {
    const SweepParam p{a};
    const double t = exact_2site_angle(p.J(), p.h());
    const std::vector<double> params{pi / 2, 2 * t, 0, 0};
    const double e = expectation(run(c, params), build_ising(p.ising(2, Topology::Chain)));
    EXPECT_NEAR(e, exact_2site_energy(p.J(), p.h()), 1e-12) << "a=" << a;
  }
}

TEST(TwoSite, CorrelationEnergy) {
  EXPECT_DOUBLE_EQ(correlation_energy(-1.2, -1.0), correlation_energy(-1.0, -1.2));
  EXPECT_NEAR(correlation_energy(exact_2site_energy(-0.5, 0.5), meanfield_2site_energy(-0.5, 0.5)),
              0.118033988749895, 1e-12);
}

TEST(SimilarityTransform, EqualsCnotConjugation) {
  for (double a : {0.0, 0.25, 0.5, 0.9}) {
    const SweepParam p{a};
    const auto h = to_matrix(build_ising(p.ising(2, Topology::Chain)));
    const auto c = oracle::cnot(2, 0, 1);
    const auto expect = c * h * c;
    EXPECT_LE(max_abs_diff(to_matrix(similarity_transformed_2site(p.J(), p.h())), expect), 1e-12);
  }
}

TEST(SimilarityTransform, GroundStateIsAProductState) {
  for (double a : {0.2, 0.5, 0.8}) {
    const SweepParam p{a};
    const auto s = full_spectrum(similarity_transformed_2site(p.J(), p.h()), true);
    EXPECT_NEAR(s.ground_energy, exact_2site_energy(p.J(), p.h()), 1e-12);
    const auto& v = *s.ground_state;
    // rank one as a 2x2 matrix
    EXPECT_LE(std::abs(v[0] * v[3] - v[1] * v[2]), 1e-12) << "a=" << a;
  }
}

}  // namespace
