#!/usr/bin/env python3
# Copyright 2026 The clustervqe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the bundled molecular Hamiltonians.

This script is NOT part of the build. It documents how the files under data/
were produced so the exact reference energies can be reproduced independently.

Requirements: pyscf (integrals, RHF, FCIDUMP) and qiskit-nature (parity
mapping with two-qubit reduction, frozen core, Z2 tapering).

  pip install pyscf qiskit-nature
  python3 data/generate.py

Pauli files use the clustervqe convention: qubit 0 is the leftmost letter.
Qiskit labels put qubit 0 on the right, so labels are reversed on export.
The identity coefficient includes the nuclear repulsion and any frozen-core
energy, so eigenvalues are total electronic energies in Hartree.
"""

import os

import numpy as np
from pyscf import gto, mcscf, scf
from pyscf.tools import fcidump

HERE = os.path.dirname(os.path.abspath(__file__))


def h2_geometry(r):
    return f"H 0 0 0; H 0 0 {r}"


def h4_geometry(a):
    # Rectangle: two H2 units with fixed 0.74 A bonds, separated by a.
    return f"H 0 0 0; H 0.74 0 0; H 0 {a} 0; H 0.74 {a} 0"


def h2h2_geometry(a):
    # Linear chain; left atoms of both H2 units fixed at 0 and 3.00 A.
    # The right atom of the first unit sits at a, the last atom at 4.50 A,
    # so b = 3.00 - a and c = 4.50 - a are measured from the moving atom.
    return f"H 0 0 0; H 0 0 {a}; H 0 0 3.00; H 0 0 4.50"


def lih_geometry(r):
    return f"Li 0 0 0; H 0 0 {r}"


def write_fcidump(path, atom, basis, frozen_core=0):
    mol = gto.M(atom=atom, basis=basis, unit="Angstrom", verbose=0)
    mf = scf.RHF(mol).run()
    if frozen_core:
        ncas = mol.nao - frozen_core
        nelecas = mol.nelectron - 2 * frozen_core
        mc = mcscf.CASCI(mf, ncas, nelecas)
        fcidump.from_mcscf(mc, path, tol=1e-14)
    else:
        fcidump.from_scf(mf, path, tol=1e-14)


def write_pauli(path, atom, basis, freeze_core=False, taper=False, comment=""):
    from qiskit_nature.second_q.drivers import PySCFDriver
    from qiskit_nature.second_q.mappers import ParityMapper
    from qiskit_nature.second_q.transformers import FreezeCoreTransformer

    driver = PySCFDriver(atom=atom, basis=basis)
    problem = driver.run()
    if freeze_core:
        problem = FreezeCoreTransformer(freeze_core=True).transform(problem)
    mapper = ParityMapper(num_particles=problem.num_particles)
    if taper:
        mapper = problem.get_tapered_mapper(mapper)
    op = mapper.map(problem.hamiltonian.second_q_op())
    constant = sum(problem.hamiltonian.constants.values())
    n = op.num_qubits

    terms = {}
    for label, coeff in op.to_list():
        assert abs(coeff.imag) < 1e-10, (label, coeff)
        ours = label[::-1]
        terms[ours] = terms.get(ours, 0.0) + coeff.real
    ident = "I" * n
    terms[ident] = terms.get(ident, 0.0) + constant

    ground = np.linalg.eigvalsh(op.to_matrix())[0] + constant
    with open(path, "w") as f:
        f.write(f"# {comment}\n")
        f.write(f"# qubits={n} terms={len(terms)} exact_ground={ground:.12f}\n")
        for label in sorted(terms):
            if abs(terms[label]) > 1e-12:
                f.write(f"{terms[label]:.15e} {label}\n")
    return ground


def grid(start, stop, step):
    n = int(round((stop - start) / step))
    return [round(start + i * step, 4) for i in range(n + 1)]


def main():
    out = os.path.join(HERE, "h2_sto3g")
    os.makedirs(out, exist_ok=True)
    for r in grid(0.30, 2.50, 0.10):
        write_fcidump(os.path.join(out, f"h2_{r:.2f}.fcidump"), h2_geometry(r), "sto-3g")

    out = os.path.join(HERE, "h2_631g")
    os.makedirs(out, exist_ok=True)
    write_fcidump(os.path.join(out, "h2_0.70.fcidump"), h2_geometry(0.70), "6-31g")
    write_pauli(os.path.join(out, "h2_0.70.pauli"), h2_geometry(0.70), "6-31g",
                comment="H2 6-31G R=0.70 A, parity mapping, two-qubit reduction")

    out = os.path.join(HERE, "h4_sto3g")
    os.makedirs(out, exist_ok=True)
    write_fcidump(os.path.join(out, "h4_0.74.fcidump"), h4_geometry(0.74), "sto-3g")
    for a in grid(0.50, 2.00, 0.25) + [0.74]:
        write_pauli(os.path.join(out, f"h4_{a:.2f}.pauli"), h4_geometry(a), "sto-3g",
                    comment=f"H4 rectangle STO-3G a={a:.2f} A, parity mapping, two-qubit reduction")

    out = os.path.join(HERE, "h2h2_sto3g")
    os.makedirs(out, exist_ok=True)
    write_fcidump(os.path.join(out, "h2h2_1.50.fcidump"), h2h2_geometry(1.50), "sto-3g")
    for a in grid(0.60, 2.40, 0.30):
        write_pauli(os.path.join(out, f"h2h2_{a:.2f}.pauli"), h2h2_geometry(a), "sto-3g",
                    comment=f"(H2)2 linear STO-3G a={a:.2f} A, parity mapping, two-qubit reduction")

    out = os.path.join(HERE, "lih_sto3g")
    os.makedirs(out, exist_ok=True)
    write_fcidump(os.path.join(out, "lih_1.55.fcidump"), lih_geometry(1.55), "sto-3g",
                  frozen_core=1)
    for r in grid(1.00, 3.00, 0.25) + [1.55]:
        write_pauli(os.path.join(out, f"lih_{r:.2f}.pauli"), lih_geometry(r), "sto-3g",
                    freeze_core=True, taper=True,
                    comment=f"LiH STO-3G R={r:.2f} A, frozen core, parity mapping, "
                            "two-qubit reduction, Z2 tapering")


if __name__ == "__main__":
    main()
