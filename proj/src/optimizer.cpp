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

#include "cvqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cvqe {
namespace {

constexpr double kArmijo = 0.1;
constexpr double kMinAlpha = 0.1;
constexpr int kMaxBacktracks = 10;
constexpr double kDamping = 0.2;
constexpr double kRoundoff = 1e-14;

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Row-major n x n.
void set_identity(std::vector<double>& m, std::size_t n) {
  std::fill(m.begin(), m.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
}

// Solves B d = -g by Cholesky. False if B is not numerically positive definite.
bool newton_direction(const std::vector<double>& b, std::span<const double> g, std::vector<double>& chol,
                      std::vector<double>& d) {
  const std::size_t n = g.size();
  chol = b;
  for (std::size_t j = 0; j < n; ++j) {
    double diag = chol[j * n + j];
    for (std::size_t k = 0; k < j; ++k) diag -= chol[j * n + k] * chol[j * n + k];
    if (!(diag > 0)) return false;
    diag = std::sqrt(diag);
    chol[j * n + j] = diag;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = chol[i * n + j];
      for (std::size_t k = 0; k < j; ++k) v -= chol[i * n + k] * chol[j * n + k];
      chol[i * n + j] = v / diag;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double v = -g[i];
    for (std::size_t k = 0; k < i; ++k) v -= chol[i * n + k] * d[k];
    d[i] = v / chol[i * n + i];
  }
  for (std::size_t i = n; i-- > 0;) {
    double v = d[i];
    for (std::size_t k = i + 1; k < n; ++k) v -= chol[k * n + i] * d[k];
    d[i] = v / chol[i * n + i];
  }
  return true;
}

}  // namespace

OptimizerResult slsqp(const Objective& f, std::vector<double> x0, const OptimizerOptions& options) {
  const std::size_t n = x0.size();
  OptimizerResult result;
  result.x = std::move(x0);
  std::vector<double> grad(n);
  result.value = f.value(result.x);
  result.evaluations = 1;
  f.gradient(result.x, grad);
  result.gradient_norm = norm(grad);
  if (n == 0) {
    result.converged = true;
    return result;
  }

  std::vector<double> b(n * n), chol(n * n);
  set_identity(b, n);
  bool identity = true;
  std::vector<double> d(n), trial(n), s(n), y(n), bs(n), next_grad(n);

  while (result.iterations < options.max_iterations) {
    if (result.gradient_norm <= options.gradient_tolerance) {
      result.converged = true;
      break;
    }
    if (!newton_direction(b, grad, chol, d) || !(dot(grad, d) < 0)) {
      set_identity(b, n);
      identity = true;
      for (std::size_t i = 0; i < n; ++i) d[i] = -grad[i];
    }

    // Backtracking: accept when f drops by at least a tenth of the linear
    // prediction, otherwise move to the minimum of the interpolating parabola.
    const double slope = dot(grad, d);
    double alpha = 1.0;
    double value = 0.0;
    bool accepted = false;
    for (int line = 0; line <= kMaxBacktracks; ++line) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = result.x[i] + alpha * d[i];
      value = f.value(trial);
      ++result.evaluations;
      const double predicted = alpha * slope;
      const double actual = value - result.value;
      // Below roundoff f cannot rank the points, so settle for no increase.
      const bool flat = -predicted <= kRoundoff * std::max(1.0, std::abs(result.value));
      if (std::isfinite(value) && (actual <= kArmijo * predicted || (flat && actual <= 0))) {
        accepted = true;
        break;
      }
      const double shrink = std::isfinite(value) ? predicted / (2.0 * (predicted - actual)) : kMinAlpha;
      alpha *= std::clamp(shrink, kMinAlpha, 1.0);
    }
    if (!accepted && std::isfinite(value) && value < result.value) accepted = true;
    if (!accepted) {
      if (identity) break;  // no descent even along -grad
      set_identity(b, n);
      identity = true;
      continue;
    }

    f.gradient(trial, next_grad);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = trial[i] - result.x[i];
      y[i] = next_grad[i] - grad[i];
    }
    ++result.iterations;
    std::swap(result.x, trial);
    std::swap(grad, next_grad);
    result.value = value;
    result.gradient_norm = norm(grad);

    if (norm(s) <= options.step_tolerance) {
      result.converged = true;
      break;
    }

    // Powell damping keeps s^T y >= 0.2 s^T B s, so B stays positive definite.
    for (std::size_t i = 0; i < n; ++i) bs[i] = dot({&b[i * n], n}, s);
    const double sbs = dot(s, bs);
    double sy = dot(s, y);
    if (!(sbs > 0)) continue;
    if (sy < kDamping * sbs) {
      const double theta = (1.0 - kDamping) * sbs / (sbs - sy);
      for (std::size_t i = 0; i < n; ++i) y[i] = theta * y[i] + (1.0 - theta) * bs[i];
      sy = kDamping * sbs;
    }
    // B <- B + y y^T / s^T y - B s s^T B / s^T B s
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i * n + j] += y[i] * y[j] / sy - bs[i] * bs[j] / sbs;
    identity = false;
  }
  if (result.gradient_norm <= options.gradient_tolerance) result.converged = true;
  return result;
}

}  // namespace cvqe
