#!/usr/bin/env python3
# Copyright 2026 The haalab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the FCIDUMP fixtures under tests/data with PySCF.

Every file gets an FCI reference energy computed by PySCF on exactly the
integrals that were written, stored in tests/data/fci_reference.json.
"""
import json
import os
import sys

import numpy as np
from pyscf import ao2mo, fci, gto, mcscf, scf
from pyscf.tools import fcidump

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "tests", "data")


def chain(n, spacing):
    return [("H", (0.0, 0.0, i * spacing)) for i in range(n)]


def write_full(path, atoms, charge=0):
    mol = gto.M(atom=atoms, basis="sto-3g", charge=charge, unit="Angstrom",
                verbose=0)
    mf = scf.RHF(mol).run()
    c = mf.mo_coeff
    h1 = c.T @ mf.get_hcore() @ c
    eri = ao2mo.restore(1, ao2mo.full(mol, c), c.shape[1])
    norb = c.shape[1]
    nelec = mol.nelectron
    write_and_solve(path, h1, eri, norb, nelec, mol.energy_nuc())


def write_cas(path, atoms, ncas, nelecas, charge=0):
    mol = gto.M(atom=atoms, basis="sto-3g", charge=charge, unit="Angstrom",
                verbose=0)
    mf = scf.RHF(mol).run()
    mc = mcscf.CASCI(mf, ncas, nelecas)
    h1, ecore = mc.get_h1eff()
    eri = ao2mo.restore(1, mc.get_h2eff(), ncas)
    write_and_solve(path, h1, eri, ncas, nelecas, ecore)


def write_and_solve(path, h1, eri, norb, nelec, ecore):
    fcidump.from_integrals(path, h1, eri, norb, nelec, nuc=ecore, ms=0,
                           tol=1e-14, float_format=" %.17g")
    neleca = nelec // 2
    e, _ = fci.direct_spin1.kernel(h1, eri, norb, (neleca, nelec - neleca),
                                   ecore=ecore, tol=1e-14, conv_tol=1e-14,
                                   max_cycle=500)
    REF[os.path.relpath(path, DATA)] = {
        "norb": norb, "nelec": nelec, "fci_energy": float(e)}


REF = {}


def main():
    write_full(os.path.join(DATA, "h2_0.7414.fcidump"),
               [("H", (0, 0, 0)), ("H", (0, 0, 0.7414))])
    for r in (0.5, 1.0, 1.5, 2.0, 2.5):
        write_full(os.path.join(DATA, "h2_scan", "r%.2f.fcidump" % r),
                   [("H", (0, 0, 0)), ("H", (0, 0, r))])
    write_full(os.path.join(DATA, "h3p_chain.fcidump"), chain(3, 1.0), 1)
    write_full(os.path.join(DATA, "h4_chain.fcidump"), chain(4, 1.0))
    write_full(os.path.join(DATA, "h5p_chain.fcidump"), chain(5, 1.0), 1)
    # Linear BeH2; Be 1s frozen, top virtual dropped: 5 orbitals, 4 electrons.
    write_cas(os.path.join(DATA, "beh2_1.33.fcidump"),
              [("Be", (0, 0, 0)), ("H", (0, 0, 1.33)), ("H", (0, 0, -1.33))],
              5, 4)
    # Stand-ins shaped like a CAS(6,6) barrier pair (12 spin orbitals, 6
    # electrons): a symmetric and a stretched H6 chain.
    os.makedirs(os.path.join(DATA, "barrier_standin"), exist_ok=True)
    write_full(os.path.join(DATA, "barrier_standin", "reactant.fcidump"),
               chain(6, 1.0))
    write_full(os.path.join(DATA, "barrier_standin", "transition_state.fcidump"),
               chain(6, 1.2))
    with open(os.path.join(DATA, "fci_reference.json"), "w") as f:
        json.dump(REF, f, indent=2, sort_keys=True)
        f.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
