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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cvqe/errors.hpp"
#include "cvqe/models.hpp"
#include "cvqe/solver.hpp"
#include "oracles.hpp"

namespace {

using namespace cvqe;

ComplexMatrix random_hermitian(std::size_t n, bool real, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const cplx z = r == c || real ? cplx(d(rng), 0) : cplx(d(rng), d(rng));
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  return m;
}

// max_k |H v_k - w_k v_k| relative to |H|.
double residual(const ComplexMatrix& h, const ComplexMatrix& v, const std::vector<double>& w) {
  const auto hv = h * v;
  double worst = 0;
  for (std::size_t k = 0; k < w.size(); ++k)
    for (std::size_t r = 0; r < h.rows(); ++r) worst = std::max(worst, std::abs(hv(r, k) - w[k] * v(r, k)));
  return worst / std::max(1.0, frobenius_norm(h));
}

TEST(Eigen, RandomRealSymmetricResiduals) {
  std::mt19937_64 rng(31);
  for (std::size_t n : {1u, 2u, 3u, 8u, 33u, 64u}) {
    const auto h = random_hermitian(n, true, rng);
    ComplexMatrix v;
    const auto w = hermitian_eigen(h, &v);
    ASSERT_EQ(w.size(), n);
    EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
    EXPECT_LE(residual(h, v, w), 1e-9) << "n=" << n;
    EXPECT_LE(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)), 1e-10);
  }
}

TEST(Eigen, RandomComplexHermitianResiduals) {
  std::mt19937_64 rng(32);
  for (std::size_t n : {2u, 5u, 16u, 40u}) {
    const auto h = random_hermitian(n, false, rng);
    ComplexMatrix v;
    const auto w = hermitian_eigen(h, &v);
    ASSERT_EQ(w.size(), n);
    EXPECT_LE(residual(h, v, w), 1e-9) << "n=" << n;
    EXPECT_LE(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)), 1e-9);
    const auto w_only = hermitian_eigen(h);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(w[k], w_only[k], 1e-10);
  }
}

TEST(Eigen, DegenerateComplexSpectrum) {
  // Anticommuting strings: eigenvalues +-sqrt(1.25), each twice.
  Observable yi(2);
  yi.add(1.0, "YI");
  yi.add(0.5, "ZY");
  ComplexMatrix v;
  const auto h = to_matrix(yi);
  const auto w = hermitian_eigen(h, &v);
  EXPECT_LE(residual(h, v, w), 1e-12);
  EXPECT_NEAR(w[0], w[1], 1e-12);
  EXPECT_NEAR(w[0], -std::sqrt(1.25), 1e-12);
}

TEST(GroundEnergy, Examples) {
  EXPECT_NEAR(ground_energy(build_ising({2, Topology::Chain, -0.5, 0.5})), -1.118033988749895, 1e-12);
  Observable z(1);
  z.add(1.0, "Z");
  EXPECT_DOUBLE_EQ(ground_energy(z), -1.0);
  EXPECT_THROW(ground_energy(Observable(15)), ResourceError);
}

TEST(GroundEnergy, SixSiteRingIsingAtHalf) {
  const auto h = build_ising(SweepParam{0.5}.ising(6, Topology::Ring));
  // Periodic TFIM with uniform coupling; free-fermion closed form.
  const double J = -0.5, hx = 0.5;
  double e = 0;
  for (int k = 0; k < 6; ++k) {
    const double q = std::numbers::pi * (2 * k + 1) / 6;  // antiperiodic sector
    e -= std::sqrt(J * J + hx * hx + 2 * std::abs(J) * hx * std::cos(q));
  }
  EXPECT_NEAR(ground_energy(h), e, 1e-10);
}

TEST(FullSpectrum, Examples) {
  Observable x(1);
  x.add(1.0, "X");
  const auto s = full_spectrum(x, false);
  ASSERT_EQ(s.eigenvalues.size(), 2u);
  EXPECT_NEAR(s.eigenvalues[0], -1, 1e-15);
  EXPECT_NEAR(s.eigenvalues[1], 1, 1e-15);
  EXPECT_FALSE(s.ground_state.has_value());

  const auto field = full_spectrum(build_ising({2, Topology::Chain, 0.0, 0.7}), true);
  const std::vector<double> expect{-1.4, 0, 0, 1.4};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(field.eigenvalues[k], expect[k], 1e-12);
  ASSERT_TRUE(field.ground_state.has_value());
  EXPECT_NEAR(field.ground_energy, -1.4, 1e-12);
  EXPECT_NEAR(expectation(*field.ground_state, build_ising({2, Topology::Chain, 0.0, 0.7})), -1.4, 1e-12);
}

TEST(FullSpectrum, TwoSiteSpectrumIsSymmetricAtZeroCoupling) {
  const auto s = full_spectrum(build_ising({2, Topology::Chain, 0.0, 1.0}), false);
  EXPECT_NEAR(s.eigenvalues.front(), -s.eigenvalues.back(), 1e-12);
}

}  // namespace
