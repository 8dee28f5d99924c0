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
#include <string_view>
#include <utility>
#include <vector>

#include "cvqe/pauli.hpp"

namespace cvqe {

enum class Topology { Chain, Ring };

Topology parse_topology(std::string_view name);
std::string_view to_string(Topology t);

/// Uniform transverse-field Ising model H = -J sum_<ij> Z_i Z_j - h sum_i X_i.
struct IsingSpec {
  std::size_t n_sites = 2;
  Topology topology = Topology::Ring;
  double J = -1.0;
  double h = 0.0;
};

/// One-parameter sweep used throughout: h = a, J = a - 1 with a in [0, 1].
struct SweepParam {
  double a = 0.0;

  double J() const noexcept { return a - 1.0; }
  double h() const noexcept { return a; }
  IsingSpec ising(std::size_t n_sites, Topology topology) const { return {n_sites, topology, J(), h()}; }
};

/// Nearest-neighbour bonds for the topology. A 2-site ring has a single
/// bond, not a doubled one.
std::vector<std::pair<std::size_t, std::size_t>> ising_bonds(std::size_t n_sites, Topology topology);

Observable build_ising(const IsingSpec& spec);

struct IsingBond {
  std::size_t i = 0;
  std::size_t j = 0;
  double J = 0.0;
};

/// General coupling matrix given as a bond list: -sum J_ij Z_i Z_j - h sum X_i.
Observable build_ising(std::size_t n_sites, const std::vector<IsingBond>& bonds, double h);

/// Closed-form 2-site ground energy -sqrt(J^2 + 4h^2).
double exact_2site_energy(double J, double h);

/// Mixing angle of the 2-site ground state
///   cos(t) (|00>+|11>)/sqrt2 + sin(t) (|01>+|10>)/sqrt2,
/// t = atan2(sqrt(J^2+4h^2) - J, 2h). Feeding (pi/2, 2t) to the cluster unit
/// prepares that state. At h = 0 this gives pi/2 for J < 0 and 0 for J > 0.
double exact_2site_angle(double J, double h);

/// Two-site product-state (mean-field) optimum: h^2/J + J while -h/J < 1,
/// otherwise -2h (antiferromagnetic J < 0, h >= 0; other signs by symmetry).
double meanfield_2site_energy(double J, double h);

/// Optimal mean-field RY angles. In the symmetry-broken branch returns
/// theta0 = asin(-h/J) in [0, pi/2) and theta1 = pi - theta0; the mirror
/// solution (pi - theta0, theta0) is degenerate. Valid for J < 0, h >= 0.
std::pair<double, double> meanfield_2site_angles(double J, double h);

/// |E_exact - E_approx|; the correlation energy when E_approx is mean-field,
/// the missing correlation energy when it is a VQE result.
double correlation_energy(double exact, double approx);

/// CNOT-conjugated 2-site Hamiltonian -J Z_1 - h X_1 (1 + X_0).
Observable similarity_transformed_2site(double J, double h);

}  // namespace cvqe
