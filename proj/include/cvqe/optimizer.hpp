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
#include <functional>
#include <span>
#include <vector>

namespace cvqe {

/// Value and gradient of a smooth objective. The line search only asks for
/// values; gradients are taken at accepted points.
struct Objective {
  std::function<double(std::span<const double> x)> value;
  /// Writes the gradient into `grad` (same length as x).
  std::function<void(std::span<const double> x, std::span<double> grad)> gradient;
};

struct OptimizerOptions {
  int max_iterations = 200;
  double gradient_tolerance = 1e-8;
  double step_tolerance = 1e-10;
};

struct OptimizerResult {
  std::vector<double> x;
  double value = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  int evaluations = 0;  // value calls
  bool converged = false;
};

/// SLSQP iteration without constraints: the search direction solves B d = -g
/// for a positive definite Hessian model B (identity at the start), the step
/// comes from a backtracking line search with quadratic interpolation, and B
/// takes a Powell-damped BFGS update.
///
/// Stops when |grad| <= gradient_tolerance, when an accepted step is shorter
/// than step_tolerance, or after max_iterations. Only decreasing steps are
/// accepted, so result.value <= f(x0).
OptimizerResult slsqp(const Objective& f, std::vector<double> x0, const OptimizerOptions& options = {});

}  // namespace cvqe
