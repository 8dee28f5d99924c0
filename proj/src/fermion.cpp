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

#include "cvqe/fermion.hpp"

#include <cmath>
#include <map>
#include <string>

#include "cvqe/errors.hpp"

namespace cvqe {

FermionOperator::FermionOperator(std::size_t n_modes) : n_modes_(n_modes) {
  if (n_modes == 0) throw StructuralError("fermion operator needs at least one mode");
}

void FermionOperator::add(double coefficient, std::vector<LadderOp> ops) {
  if (ops.size() % 2 != 0) throw StructuralError("fermion term has an odd number of ladder operators");
  for (const auto& op : ops)
    if (op.mode >= n_modes_)
      throw StructuralError("mode " + std::to_string(op.mode) + " out of range for " + std::to_string(n_modes_) +
                            " modes");
  terms_.push_back({coefficient, std::move(ops)});
}

FermionOperator to_fermion_hamiltonian(const FcidumpData& data) {
  const std::size_t n = data.n_orbitals();
  FermionOperator op(2 * n);
  op.add(data.core_energy(), {});
  auto mode = [n](std::size_t orbital, std::size_t spin) { return orbital + spin * n; };

  for (std::size_t spin = 0; spin < 2; ++spin)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const double h = data.one_body(p, q);
        if (h != 0.0) op.add(h, {create(mode(p, spin)), annihilate(mode(q, spin))});
      }

  for (std::size_t s1 = 0; s1 < 2; ++s1)
    for (std::size_t s2 = 0; s2 < 2; ++s2)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
              const double v = data.two_body(p, q, r, s);
              if (v == 0.0) continue;
              const auto a = mode(p, s1), b = mode(r, s2), c = mode(s, s2), d = mode(q, s1);
              if (a == b || c == d) continue;
              op.add(0.5 * v, {create(a), create(b), annihilate(c), annihilate(d)});
            }
  return op;
}

namespace {

using ComplexSum = std::map<PauliString, cplx>;

ComplexSum product(const ComplexSum& lhs, const ComplexSum& rhs) {
  ComplexSum out;
  for (const auto& [a, ca] : lhs)
    for (const auto& [b, cb] : rhs) {
      auto [phase, s] = multiply(a, b);
      out[std::move(s)] += phase * ca * cb;
    }
  return out;
}

// Expands each fermion term as a product of per-operator Pauli sums.
template <typename LadderMap>
Observable map_operator(const FermionOperator& op, std::size_t n_qubits, LadderMap&& ladder) {
  ComplexSum total;
  for (const auto& term : op.terms()) {
    ComplexSum acc{{PauliString(n_qubits), cplx{term.coefficient, 0.0}}};
    for (const auto& l : term.ops) acc = product(acc, ladder(l));
    for (auto& [s, c] : acc) total[s] += c;
  }
  Observable out(n_qubits);
  for (const auto& [s, c] : total) {
    if (std::abs(c.imag()) > 1e-10)
      throw ConsistencyError("mapped operator has imaginary coefficient " + std::to_string(c.imag()) + " on " +
                             s.str() + "; input is not Hermitian");
    out.add(c.real(), s);
  }
  return normalize(out);
}

}  // namespace

Observable jordan_wigner(const FermionOperator& op) {
  const std::size_t n = op.n_modes();
  return map_operator(op, n, [n](const LadderOp& l) {
    PauliString xs(n), ys(n);
    for (std::size_t k = 0; k < l.mode; ++k) {
      xs.set(k, Pauli::Z);
      ys.set(k, Pauli::Z);
    }
    xs.set(l.mode, Pauli::X);
    ys.set(l.mode, Pauli::Y);
    const double sign = l.dagger ? -1.0 : 1.0;
    return ComplexSum{{xs, {0.5, 0.0}}, {ys, {0.0, 0.5 * sign}}};
  });
}

Observable parity_map(const FermionOperator& op, std::optional<ParityReduction> reduction) {
  const std::size_t n = op.n_modes();
  const auto full = map_operator(op, n, [n](const LadderOp& l) {
    const std::size_t j = l.mode;
    PauliString xs(n), ys(n);
    for (std::size_t k = j + 1; k < n; ++k) {
      xs.set(k, Pauli::X);
      ys.set(k, Pauli::X);
    }
    xs.set(j, Pauli::X);
    if (j > 0) xs.set(j - 1, Pauli::Z);
    ys.set(j, Pauli::Y);
    const double sign = l.dagger ? -1.0 : 1.0;
    return ComplexSum{{xs, {0.5, 0.0}}, {ys, {0.0, 0.5 * sign}}};
  });
  if (!reduction) return full;

  const int ne = reduction->n_electrons;
  const int ms2 = reduction->ms2;
  if (n < 4 || n % 2 != 0)
    throw UnsupportedError("two-qubit reduction needs an even number of modes >= 4, got " + std::to_string(n));
  if (ne < 0 || (ne + ms2) % 2 != 0)
    throw UnsupportedError("NELEC=" + std::to_string(ne) + ", MS2=" + std::to_string(ms2) +
                           " does not fix integer spin populations");
  const int n_up = (ne + ms2) / 2;
  const int n_down = ne - n_up;
  const int half = static_cast<int>(n / 2);
  if (n_up < 0 || n_down < 0 || n_up > half || n_down > half)
    throw UnsupportedError("spin populations do not fit the orbital space");

  const std::size_t up_qubit = n / 2 - 1;
  const std::size_t total_qubit = n - 1;
  const double up_sign = (n_up % 2) ? -1.0 : 1.0;
  const double total_sign = (ne % 2) ? -1.0 : 1.0;

  Observable reduced(n - 2);
  for (const auto& t : full.terms()) {
    double c = t.coefficient;
    for (auto [q, sign] : {std::pair{up_qubit, up_sign}, std::pair{total_qubit, total_sign}}) {
      const Pauli p = t.string[q];
      if (p == Pauli::X || p == Pauli::Y)
        throw UnsupportedError("term " + t.string.str() + " flips pinned parity qubit " + std::to_string(q));
      if (p == Pauli::Z) c *= sign;
    }
    PauliString s(n - 2);
    std::size_t out = 0;
    for (std::size_t q = 0; q < n; ++q)
      if (q != up_qubit && q != total_qubit) s.set(out++, t.string[q]);
    reduced.add(c, std::move(s));
  }
  return normalize(reduced);
}

}  // namespace cvqe
