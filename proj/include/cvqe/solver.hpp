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
#include <optional>
#include <vector>

#include "cvqe/linalg.hpp"
#include "cvqe/pauli.hpp"
#include "cvqe/state.hpp"

namespace cvqe {

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  double ground_energy = 0.0;
  std::optional<StateVector> ground_state;
};

/// Eigen-decomposition of a dense real symmetric matrix stored row-major.
/// Householder tridiagonalization followed by the implicit-shift QL
/// iteration. On return `matrix` holds eigenvectors in its columns (when
/// `with_vectors`) and the result is sorted ascending.
std::vector<double> symmetric_eigen(std::vector<double>& matrix, std::size_t n, bool with_vectors);

/// All eigenvalues of a Hermitian matrix; eigenvectors in the columns of
/// `vectors` when non-null. Complex input goes through the real embedding
/// [[Re, -Im], [Im, Re]], whose spectrum is that of the input doubled.
std::vector<double> hermitian_eigen(const ComplexMatrix& h, ComplexMatrix* vectors = nullptr);

/// Smallest eigenvalue of to_matrix(obs). Throws ResourceError above `max_qubits`.
double ground_energy(const Observable& obs, std::size_t max_qubits = kDenseQubitCap);

SpectrumResult full_spectrum(const Observable& obs, bool with_vectors,
                             std::size_t max_qubits = kDenseQubitCap);

}  // namespace cvqe
