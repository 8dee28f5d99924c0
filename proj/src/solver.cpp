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

#include "cvqe/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvqe/errors.hpp"

namespace cvqe {

namespace {

// Row-major accessor over a flat buffer.
struct View {
  double* p;
  std::size_t n;
  double& operator()(std::size_t r, std::size_t c) const { return p[r * n + c]; }
};

// Householder reduction to tridiagonal form (EISPACK tred2 ordering). On
// exit d holds the diagonal, e the sub-diagonal in e[1..n-1], and v the
// accumulated orthogonal transform.
void tridiagonalize(View v, std::vector<double>& d, std::vector<double>& e) {
  const auto n = static_cast<std::ptrdiff_t>(v.n);
  for (std::ptrdiff_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (std::ptrdiff_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::ptrdiff_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::ptrdiff_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::ptrdiff_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::ptrdiff_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::ptrdiff_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::ptrdiff_t k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::ptrdiff_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::ptrdiff_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::ptrdiff_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::ptrdiff_t k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (std::ptrdiff_t i = 0; i < n - 1; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::ptrdiff_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (std::ptrdiff_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::ptrdiff_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::ptrdiff_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::ptrdiff_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating v when requested.
void ql_implicit(View v, std::vector<double>& d, std::vector<double>& e, bool with_vectors) {
  const auto n = static_cast<std::ptrdiff_t>(v.n);
  for (std::ptrdiff_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::ptrdiff_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::ptrdiff_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 200) throw ConsistencyError("QL iteration failed to converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::ptrdiff_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::ptrdiff_t i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (with_vectors) {
            for (std::ptrdiff_t k = 0; k < n; ++k) {
              h = v(k, i + 1);
              v(k, i + 1) = s * v(k, i) + c * h;
              v(k, i) = c * v(k, i) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }

  // Selection sort keeps eigenvector columns paired with their values.
  for (std::ptrdiff_t i = 0; i < n - 1; ++i) {
    std::ptrdiff_t k = i;
    double p = d[i];
    for (std::ptrdiff_t j = i + 1; j < n; ++j)
      if (d[j] < p) {
        k = j;
        p = d[j];
      }
    if (k != i) {
      d[k] = d[i];
      d[i] = p;
      if (with_vectors)
        for (std::ptrdiff_t j = 0; j < n; ++j) std::swap(v(j, i), v(j, k));
    }
  }
}

}  // namespace

std::vector<double> symmetric_eigen(std::vector<double>& matrix, std::size_t n, bool with_vectors) {
  if (matrix.size() != n * n) throw StructuralError("symmetric_eigen: buffer is not n x n");
  if (n == 0) return {};
  std::vector<double> d(n), e(n);
  View v{matrix.data(), n};
  tridiagonalize(v, d, e);
  ql_implicit(v, d, e, with_vectors);
  return d;
}

std::vector<double> hermitian_eigen(const ComplexMatrix& h, ComplexMatrix* vectors) {
  if (h.rows() != h.cols()) throw StructuralError("hermitian_eigen: matrix is not square");
  const std::size_t n = h.rows();
  const bool want = vectors != nullptr;

  if (h.is_real()) {
    std::vector<double> a(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a[r * n + c] = h(r, c).real();
    auto w = symmetric_eigen(a, n, want);
    if (want) {
      *vectors = ComplexMatrix(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) (*vectors)(r, c) = a[r * n + c];
    }
    return w;
  }

  const std::size_t m = 2 * n;
  std::vector<double> a(m * m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto z = h(r, c);
      a[r * m + c] = z.real();
      a[r * m + c + n] = -z.imag();
      a[(r + n) * m + c] = z.imag();
      a[(r + n) * m + c + n] = z.real();
    }
  const auto doubled = symmetric_eigen(a, m, want);

  std::vector<double> w;
  w.reserve(n);
  if (!want) {
    for (std::size_t k = 0; k < m; k += 2) w.push_back(0.5 * (doubled[k] + doubled[k + 1]));
    return w;
  }

  // Each eigenvalue appears twice with embedded vectors (x; y) and (-y; x),
  // both encoding x + iy up to a phase. Keep one orthonormal representative
  // per complex dimension.
  double scale = 0.0;
  for (double x : doubled) scale = std::max(scale, std::abs(x));
  const double cluster_tol = 1e-8 * std::max(1.0, scale);
  std::vector<std::vector<cplx>> kept;
  *vectors = ComplexMatrix(n, n);
  std::size_t cluster_begin = 0;
  for (std::size_t k = 0; k < m && kept.size() < n; ++k) {
    if (k > 0 && doubled[k] - doubled[k - 1] > cluster_tol) cluster_begin = w.size();
    std::vector<cplx> cand(n);
    for (std::size_t r = 0; r < n; ++r) cand[r] = {a[r * m + k], a[(r + n) * m + k]};
    for (std::size_t j = cluster_begin; j < kept.size(); ++j) {
      cplx overlap{};
      for (std::size_t r = 0; r < n; ++r) overlap += std::conj(kept[j][r]) * cand[r];
      for (std::size_t r = 0; r < n; ++r) cand[r] -= overlap * kept[j][r];
    }
    double norm = 0.0;
    for (const auto& z : cand) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 0.5) continue;
    for (auto& z : cand) z /= norm;
    for (std::size_t r = 0; r < n; ++r) (*vectors)(r, kept.size()) = cand[r];
    kept.push_back(std::move(cand));
    w.push_back(doubled[k]);
  }
  if (kept.size() != n) throw ConsistencyError("complex eigenvector recovery lost a dimension");
  return w;
}

double ground_energy(const Observable& obs, std::size_t max_qubits) {
  const auto w = hermitian_eigen(to_matrix(obs, max_qubits));
  return w.front();
}

SpectrumResult full_spectrum(const Observable& obs, bool with_vectors, std::size_t max_qubits) {
  const auto h = to_matrix(obs, max_qubits);
  SpectrumResult out;
  if (!with_vectors) {
    out.eigenvalues = hermitian_eigen(h);
  } else {
    ComplexMatrix v;
    out.eigenvalues = hermitian_eigen(h, &v);
    std::vector<cplx> ground(h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r) ground[r] = v(r, 0);
    out.ground_state = StateVector::from_amplitudes(obs.n_qubits(), std::move(ground));
  }
  out.ground_energy = out.eigenvalues.front();
  return out;
}

}  // namespace cvqe
