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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cvqe/ansatz.hpp"
#include "cvqe/fermion.hpp"
#include "cvqe/models.hpp"
#include "cvqe/simulator.hpp"
#include "cvqe/solver.hpp"
#include "cvqe/sweep.hpp"
#include "cvqe/vqe.hpp"

namespace {

using namespace cvqe;
namespace fs = std::filesystem;
using std::numbers::pi;

const fs::path kData = CVQE_DATA_DIR;
constexpr double kMilliHartree = 1e-3;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::vector<fs::path> files_in(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ext) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

ComplexMatrix cnot01() {
  ComplexMatrix m(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

// Equality of angles modulo 2pi.
double angle_gap(double a, double b) {
  const double d = std::remainder(a - b, 2 * pi);
  return std::abs(d);
}

Verdict two_site_closed_forms() {
  double worst_full = 0, worst_mf = 0, worst_angle = 0;
  VqeOptions opts;
  for (int k = 0; k <= 100; ++k) {
    const SweepParam p{k / 100.0};
    const auto h = build_ising(p.ising(2, Topology::Chain));
    const auto full = solve(VqeProblem(h, {builtin_template("unit2", 2), 1}, opts));
    worst_full = std::max(worst_full, std::abs(full.energy - exact_2site_energy(p.J(), p.h())));
    const auto mf = solve(VqeProblem(h, {builtin_template("unit2", 2), 0}, opts));
    worst_mf = std::max(worst_mf, std::abs(mf.energy - meanfield_2site_energy(p.J(), p.h())));

    // Angle structure. The energy is quadratic in the angles, so the angle
    // tolerance is the square root of the energy tolerance; at the branch
    // point itself the landscape is quartic and only the energy is checked.
    const double t0 = mf.parameters[0], t1 = mf.parameters[1];
    const double ratio = p.J() == 0 ? 2.0 : -p.h() / p.J();
    if (std::abs(ratio - 1.0) < 0.05) continue;
    double gap;
    if (ratio < 1) {
      gap = std::max({angle_gap(t0 + t1, pi), std::abs(std::sin(t0) - ratio), std::abs(std::sin(t1) - ratio)});
    } else {
      gap = std::max(angle_gap(t0, pi / 2), angle_gap(t1, pi / 2));
    }
    worst_angle = std::max(worst_angle, gap);
  }
  const bool pass = worst_full <= 1e-8 && worst_mf <= 1e-8 && worst_angle <= 1e-4;
  return {pass, "101 points, max |E - exact| " + fmt("%.2e", worst_full) + ", max |E0 - meanfield| " +
                    fmt("%.2e", worst_mf) + ", max angle deviation " + fmt("%.2e", worst_angle)};
}

Verdict similarity_transform() {
  double worst = 0, schmidt = 0;
  for (int k = 0; k <= 20; ++k) {
    const SweepParam p{k / 20.0};
    const auto c = cnot01();
    const auto conj = c * to_matrix(build_ising(p.ising(2, Topology::Chain))) * c;
    worst = std::max(worst, max_abs_diff(to_matrix(similarity_transformed_2site(p.J(), p.h())), conj));
    if (p.h() == 0) continue;  // degenerate ground space
    const auto s = full_spectrum(similarity_transformed_2site(p.J(), p.h()), true);
    const auto& v = *s.ground_state;
    // Smaller singular value of the 2x2 coefficient matrix.
    const double det = std::abs(v[0] * v[3] - v[1] * v[2]);
    const double disc = std::sqrt(std::max(0.0, 0.25 - det * det));
    schmidt = std::max(schmidt, det / std::sqrt(0.5 + disc));
  }
  return {worst <= 1e-12 && schmidt <= 1e-10,
          "max entry gap " + fmt("%.2e", worst) + ", max second Schmidt coefficient " + fmt("%.2e", schmidt)};
}

Verdict four_site_ising() {
  VqeOptions opts;
  const auto recs =
      ising_sweep(4, Topology::Ring, builtin_template("4q", 4), 4, parse_grid("0:1:0.1"), opts, std::nullopt);
  double worst = 0;
  bool failed = false;
  for (const auto& r : recs) {
    failed |= r.failed();
    worst = std::max(worst, r.delta_Ec);
  }
  return {!failed && worst <= 0.01, "11 points, max delta_Ec " + fmt("%.5f", worst)};
}

Verdict six_site_ledger() {
  struct Row {
    const char* cluster;
    int reps;
    double table;
  };
  const Row rows[] = {{"A", 2, 0.07028}, {"A", 4, 0.05662}, {"A", 6, 0.00296}, {"A", 8, 0.00250},
                      {"B", 2, 0.08257}, {"B", 4, 0.06482}, {"B", 6, 0.03775}, {"B", 8, 0.00142},
                      {"C", 2, 0.08257}, {"C", 4, 0.08128}, {"C", 6, 0.05027}, {"C", 8, 0.00245}};
  VqeOptions opts;
  bool pass = true;
  std::string detail;
  for (const auto& row : rows) {
    const auto recs = ising_sweep(6, Topology::Ring, builtin_template(row.cluster, 6), row.reps, {0.5}, opts);
    const auto& r = recs.front();
    const double bound = row.table * 1.1 + 1e-4;
    const bool ok = !r.failed() && r.delta_Ec <= bound && r.depth == 2 * row.reps + 1;
    pass &= ok;
    detail += std::string(row.cluster) + std::to_string(row.reps) + "=" + fmt("%.5f", r.delta_Ec) +
              (ok ? "" : "(>" + fmt("%.5f", bound) + ")") + " ";
  }
  detail.pop_back();
  return {pass, detail};
}

Verdict depth_parameter_law() {
  bool pass = true;
  for (const auto& name : builtin_template_names()) {
    const std::size_t n = name == "unit2" ? 2 : name == "4q" ? 4 : 6;
    for (int reps = 0; reps <= 8; ++reps) {
      const auto c = build(builtin_template(name, n), reps);
      pass &= depth(c) == static_cast<std::size_t>(2 * reps + 1);
      pass &= c.n_parameters() == n * static_cast<std::size_t>(reps + 1);
    }
  }
  // Labels: slots run qubit-major through each rotation layer.
  for (const auto& [name, n] : {std::pair<const char*, std::size_t>{"4q", 4}, {"C", 6}}) {
    const auto c = build(builtin_template(name, n), 2);
    std::size_t expect = 0;
    for (const auto& g : c.gates())
      if (g.parameter) pass &= *g.parameter == expect++;
    pass &= expect == 3 * n;
  }
  return {pass, "5 templates x reps 0..8; 4q and C at reps=2 label 12 and 18 slots in order"};
}

Verdict h2_jordan_wigner() {
  VqeOptions opts;
  const auto direct = curve_run(kData / "h2_sto3g", Mapping::JordanWigner, "4q", 5, opts);
  VqeOptions adi = opts;
  adi.strategy = Strategy::Adiabatic;
  const auto walk = curve_run(kData / "h2_sto3g", Mapping::JordanWigner, "4q", 4, adi);
  double w5 = 0, w4 = 0;
  bool failed = false;
  for (const auto& r : direct) {
    failed |= r.failed();
    w5 = std::max(w5, r.delta_Ec);
  }
  for (const auto& r : walk) {
    failed |= r.failed();
    w4 = std::max(w4, r.delta_Ec);
  }
  return {!failed && direct.size() == 23 && w5 <= kMilliHartree && w4 <= kMilliHartree,
          std::to_string(direct.size()) + " bond lengths, reps=5 max delta_Ec " + fmt("%.2e", w5) +
              ", reps=4 adiabatic max " + fmt("%.2e", w4)};
}

Verdict h2_mean_field() {
  VqeOptions opts;
  const auto mf_circuit = build(builtin_template("unit2", 2), 0);
  const std::vector<double> reference{pi, 0};
  double worst_below = 0, gain_at_2 = 0;
  for (const auto& path : files_in(kData / "h2_sto3g", ".fcidump")) {
    const double r = geometry_key(path).second;
    const auto h = load_hamiltonian(path, Mapping::ParityReduced);
    const double fixed = expectation(run(mf_circuit, reference), h);
    const double best = solve(VqeProblem(h, {builtin_template("unit2", 2), 0}, opts)).energy;
    if (r <= 1.0 + 1e-9) worst_below = std::max(worst_below, std::abs(best - fixed));
    if (std::abs(r - 2.0) < 1e-9) gain_at_2 = fixed - best;
  }
  return {worst_below <= 1e-6 && gain_at_2 > kMilliHartree,
          "R <= 1.0 max |E0 - E_ref| " + fmt("%.2e", worst_below) + ", gain at R = 2.0 " + fmt("%.5f", gain_at_2)};
}

Verdict molecular_ledger() {
  struct Row {
    fs::path file;
    const char* cluster;
    int reps;
    double bound;
  };
  const Row rows[] = {{kData / "h4_sto3g" / "h4_0.74.pauli", "C", 6, 1e-4},
                      {kData / "h2h2_sto3g" / "h2h2_1.50.pauli", "B", 6, 0.0017},
                      {kData / "lih_sto3g" / "lih_1.55.pauli", "C", 8, 1e-3}};
  VqeOptions opts;
  bool pass = true;
  std::string detail;
  for (const auto& row : rows) {
    const auto r = molecule_run(row.file, Mapping::PauliFile, row.cluster, row.reps, opts);
    const bool ok = !r.failed() && r.delta_Ec <= row.bound;
    pass &= ok;
    detail += r.system + " " + row.cluster + std::to_string(row.reps) + "=" + fmt("%.5f", r.delta_Ec) +
              (ok ? "" : "(>" + fmt("%g", row.bound) + ")") + " ";
  }
  detail.pop_back();
  return {pass, detail};
}

Verdict mapping_equivalences() {
  std::vector<fs::path> inputs = files_in(kData / "h2_sto3g", ".fcidump");
  for (const auto& dir : {"h2_631g", "h4_sto3g", "h2h2_sto3g", "lih_sto3g"})
    for (const auto& f : files_in(kData / dir, ".fcidump")) inputs.push_back(f);
  double iso = 0, reduced = 0;
  for (const auto& path : inputs) {
    const auto d = read_fcidump(path);
    const auto op = to_fermion_hamiltonian(d);
    const auto a = full_spectrum(jordan_wigner(op), false).eigenvalues;
    const auto b = full_spectrum(parity_map(op), false).eigenvalues;
    for (std::size_t k = 0; k < a.size(); ++k) iso = std::max(iso, std::abs(a[k] - b[k]));
    if (d.n_orbitals() == 2)
      reduced = std::max(reduced, std::abs(ground_energy(parity_map(op, ParityReduction{d.n_electrons(), d.ms2()})) -
                                           a.front()));
  }

  // a+_j a_j -> (I - Z_j)/2, symbolically and as a diagonal occupation matrix.
  double number = 0;
  const std::size_t n = 4;
  for (std::size_t j = 0; j < n; ++j) {
    FermionOperator nj(n);
    nj.add(1.0, {create(j), annihilate(j)});
    const auto q = jordan_wigner(nj);
    auto z = PauliString(n);
    z.set(j, Pauli::Z);
    number = std::max({number, std::abs(q.coefficient(PauliString(n)) - 0.5), std::abs(q.coefficient(z) + 0.5),
                       std::abs(static_cast<double>(q.terms().size()) - 2)});
    const auto m = to_matrix(q);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const double occ = static_cast<double>((i >> (n - 1 - j)) & 1);
      number = std::max(number, std::abs(m(i, i) - occ));
    }
  }
  return {iso <= 1e-9 && reduced <= 1e-9 && number <= 1e-15,
          std::to_string(inputs.size()) + " FCIDUMPs, JW/parity spectral gap " + fmt("%.2e", iso) +
              ", reduced H2 ground gap " + fmt("%.2e", reduced) + ", number operator gap " + fmt("%.1e", number)};
}

Verdict property_suite() {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> angle(0, 2 * pi);

  // Norm over random gate sequences.
  double norm_gap = 0;
  StateVector s(6);
  for (int g = 0; g < 10000; ++g) {
    const std::size_t a = rng() % 6, b = (a + 1 + rng() % 5) % 6;
    switch (rng() % 4) {
      case 0: apply_gate(s, Gate::ry(a, angle(rng))); break;
      case 1: apply_gate(s, Gate::x(a)); break;
      case 2: apply_gate(s, Gate::cnot(a, b)); break;
      default: apply_gate(s, Gate::cz(a, b)); break;
    }
  }
  norm_gap = std::abs(s.norm() - 1);

  // Variational bound on every evaluation.
  const auto h = build_ising(SweepParam{0.5}.ising(6, Topology::Ring));
  const double exact = ground_energy(h);
  std::atomic<double> lowest{1e9};
  VqeOptions opts;
  opts.max_iterations = 50;
  opts.on_evaluation = [&](double e) {
    double cur = lowest.load();
    while (e < cur && !lowest.compare_exchange_weak(cur, e)) {
    }
  };
  const AnsatzSpec spec{builtin_template("A", 6), 4};
  solve(VqeProblem(h, spec, opts));
  const bool bound = lowest.load() >= exact - 1e-10;

  // Parameter shift against finite differences.
  VqeOptions fd;
  fd.gradient_mode = GradientMode::FiniteDifference;
  EnergyFunction fps(VqeProblem(h, spec)), ffd(VqeProblem(h, spec, fd));
  std::vector<double> x(fps.n_parameters()), g1(x.size()), g2(x.size());
  double grad_gap = 0;
  for (int t = 0; t < 100; ++t) {
    for (auto& v : x) v = angle(rng);
    fps.gradient(x, g1);
    ffd.gradient(x, g2);
    for (std::size_t k = 0; k < x.size(); ++k) grad_gap = std::max(grad_gap, std::abs(g1[k] - g2[k]));
  }

  // Determinism and CSV round trip.
  VqeOptions det;
  det.max_iterations = 40;
  det.seed = 99;
  const auto r1 = ising_sweep(6, Topology::Ring, builtin_template("C", 6), 2, {0.3, 0.6}, det);
  const auto r2 = ising_sweep(6, Topology::Ring, builtin_template("C", 6), 2, {0.3, 0.6}, det);
  bool same = r1.size() == r2.size();
  for (std::size_t i = 0; same && i < r1.size(); ++i) same = r1[i].E_vqe == r2[i].E_vqe;
  const auto back = parse_csv(render_csv(r1));
  bool round = back.size() == r1.size();
  for (std::size_t i = 0; round && i < r1.size(); ++i)
    round = back[i].E_vqe == r1[i].E_vqe && back[i].model_param == r1[i].model_param &&
            back[i].delta_Ec == r1[i].delta_Ec && back[i].system == r1[i].system;

  const bool pairings = pairing_count(2) == 1 && pairing_count(4) == 3 && pairing_count(6) == 15;
  const bool pass = norm_gap <= 1e-9 && bound && grad_gap <= 1e-6 && same && round && pairings;
  return {pass, "norm gap " + fmt("%.1e", norm_gap) + ", bound " + (bound ? "held" : "violated") +
                    ", shift vs FD " + fmt("%.1e", grad_gap) + ", determinism " + (same ? "ok" : "broken") +
                    ", CSV " + (round ? "ok" : "broken") + ", pairings " + (pairings ? "ok" : "wrong")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"two-site closed forms", two_site_closed_forms},
      {"similarity transform", similarity_transform},
      {"four-site Ising, 4q reps=4", four_site_ising},
      {"six-site Ising ledger at a=0.5", six_site_ledger},
      {"depth and parameter law", depth_parameter_law},
      {"H2 STO-3G Jordan-Wigner curve", h2_jordan_wigner},
      {"H2 mean-field and Coulson-Fischer point", h2_mean_field},
      {"six-qubit molecular ledger", molecular_ledger},
      {"mapping equivalences", mapping_equivalences},
      {"property suite", property_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !v.pass;
    std::printf("criterion %2zu %s  %s: %s [%.1fs]\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
