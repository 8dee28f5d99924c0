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

#include "cvqe/models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvqe/errors.hpp"

namespace cvqe {

Topology parse_topology(std::string_view name) {
  if (name == "chain") return Topology::Chain;
  if (name == "ring") return Topology::Ring;
  throw StructuralError("unknown topology '" + std::string(name) + "' (expected chain or ring)");
}

std::string_view to_string(Topology t) { return t == Topology::Chain ? "chain" : "ring"; }

std::vector<std::pair<std::size_t, std::size_t>> ising_bonds(std::size_t n_sites, Topology topology) {
  if (n_sites < 2) throw StructuralError("Ising model needs at least two sites");
  std::vector<std::pair<std::size_t, std::size_t>> bonds;
  for (std::size_t i = 0; i + 1 < n_sites; ++i) bonds.emplace_back(i, i + 1);
  if (topology == Topology::Ring && n_sites >= 3) bonds.emplace_back(n_sites - 1, 0);
  return bonds;
}

Observable build_ising(std::size_t n_sites, const std::vector<IsingBond>& bonds, double h) {
  if (n_sites < 2) throw StructuralError("Ising model needs at least two sites");
  Observable obs(n_sites);
  for (const auto& b : bonds) {
    if (b.i >= n_sites || b.j >= n_sites || b.i == b.j)
      throw StructuralError("invalid Ising bond (" + std::to_string(b.i) + "," + std::to_string(b.j) + ")");
    PauliString zz(n_sites);
    zz.set(b.i, Pauli::Z);
    zz.set(b.j, Pauli::Z);
    obs.add(-b.J, std::move(zz));
  }
  for (std::size_t i = 0; i < n_sites; ++i) obs.add(-h, PauliString::single(n_sites, i, Pauli::X));
  return normalize(obs);
}

Observable build_ising(const IsingSpec& spec) {
  std::vector<IsingBond> bonds;
  for (auto [i, j] : ising_bonds(spec.n_sites, spec.topology)) bonds.push_back({i, j, spec.J});
  return build_ising(spec.n_sites, bonds, spec.h);
}

double exact_2site_energy(double J, double h) { return -std::sqrt(J * J + 4.0 * h * h); }

double exact_2site_angle(double J, double h) {
  return std::atan2(std::sqrt(J * J + 4.0 * h * h) - J, 2.0 * h);
}

double meanfield_2site_energy(double J, double h) {
  // Flipping qubit 1 (or 0) maps (J, h) to (-J, h) and (J, -h) without
  // changing the product-state family, so the magnitudes are what matter.
  // For J < 0 <= h this is h^2/J + J and -2h.
  const double aj = std::abs(J);
  const double ah = std::abs(h);
  if (ah < aj) return -aj - ah * ah / aj;
  return -2.0 * ah;
}

std::pair<double, double> meanfield_2site_angles(double J, double h) {
  constexpr double pi = std::numbers::pi;
  if (J != 0.0 && -h / J < 1.0) {
    const double t0 = std::asin(-h / J);
    return {t0, pi - t0};
  }
  return {pi / 2, pi / 2};
}

double correlation_energy(double exact, double approx) { return std::abs(exact - approx); }

Observable similarity_transformed_2site(double J, double h) {
  Observable obs(2);
  obs.add(-J, "IZ");
  obs.add(-h, "IX");
  obs.add(-h, "XX");
  return obs;
}

}  // namespace cvqe
