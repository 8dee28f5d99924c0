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

#include "cvqe/optimizer.hpp"

namespace {

using namespace cvqe;

Objective rosenbrock() {
  return {[](std::span<const double> x) {
            const double a = 1 - x[0], b = x[1] - x[0] * x[0];
            return a * a + 100 * b * b;
          },
          [](std::span<const double> x, std::span<double> g) {
            const double a = 1 - x[0], b = x[1] - x[0] * x[0];
            g[0] = -2 * a - 400 * x[0] * b;
            g[1] = 200 * b;
          }};
}

// f = sum_i w_i (x_i - c_i)^2
Objective bowl(std::vector<double> w, std::vector<double> c) {
  return {[=](std::span<const double> x) {
            double v = 0;
            for (std::size_t i = 0; i < x.size(); ++i) v += w[i] * (x[i] - c[i]) * (x[i] - c[i]);
            return v;
          },
          [=](std::span<const double> x, std::span<double> g) {
            for (std::size_t i = 0; i < x.size(); ++i) g[i] = 2 * w[i] * (x[i] - c[i]);
          }};
}

TEST(Slsqp, QuadraticBowlConvergesQuickly) {
  const std::vector<double> c{1.0, -2.0, 0.5, 3.0};
  const auto r = slsqp(bowl({1, 1, 1, 1}, c), {0.0, 0.0, 0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 5);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(r.x[i], c[i], 1e-10);
  EXPECT_LE(r.value, 1e-20);
}

TEST(Slsqp, AnisotropicQuadratic) {
  const auto r = slsqp(bowl({1, 2, 3}, {1, 1, 1}), {0.0, 0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 15);
  for (double xi : r.x) EXPECT_NEAR(xi, 1.0, 1e-8);
  EXPECT_LE(r.gradient_norm, 1e-8);
}

TEST(Slsqp, Rosenbrock) {
  OptimizerOptions opt;
  opt.max_iterations = 500;
  const auto r = slsqp(rosenbrock(), {-1.2, 1.0}, opt);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], 1.0, 1e-6);
  EXPECT_GT(r.evaluations, r.iterations);
}

TEST(Slsqp, RespectsIterationCapAndNeverIncreases) {
  OptimizerOptions opt;
  opt.max_iterations = 3;
  const auto r = slsqp(rosenbrock(), {-1.2, 1.0}, opt);
  EXPECT_LE(r.iterations, 3);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.value, 24.2);  // f(x0)
}

TEST(Slsqp, StartingAtTheMinimumStopsImmediately) {
  const auto r = slsqp(bowl({1}, {0}), {0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.value, 0.0);
}

TEST(Slsqp, PeriodicLandscape) {
  const Objective f{[](std::span<const double> x) { return std::cos(x[0]) - std::cos(2 * x[1]); },
                    [](std::span<const double> x, std::span<double> g) {
                      g[0] = -std::sin(x[0]);
                      g[1] = 2 * std::sin(2 * x[1]);
                    }};
  const auto r = slsqp(f, {2.0, 0.3});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, -2.0, 1e-12);
}

TEST(Slsqp, NonFiniteTrialShrinksTheStep) {
  // Infinite outside |x| < 2; the first full step lands outside.
  const Objective f{[](std::span<const double> x) {
                      return std::abs(x[0]) < 2 ? (x[0] - 1) * (x[0] - 1) : INFINITY;
                    },
                    [](std::span<const double> x, std::span<double> g) { g[0] = 2 * (x[0] - 1); }};
  const auto r = slsqp(f, {-1.5});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-8);
}

}  // namespace
