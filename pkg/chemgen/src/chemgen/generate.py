"""Generate qubit-Hamiltonian family files for H2, LiH and HeH+.

Each preset runs restricted Hartree-Fock over a bond-length grid,
reduces to the molecule's active space, maps to qubits (tapered
Bravyi-Kitaev for H2, Jordan-Wigner for HeH+, the paired-electron
3-qubit encoding for LiH), checks the term structure against the
molecule's template, and writes the JSON family format consumed by the
snakevqe package.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from . import qubit
from .scf import frozen_core_reduction, mo_integrals, rhf


@dataclass(frozen=True)
class MoleculeSpec:
    name: str
    basis: str
    transformation: str
    n_qubits: int
    grid_min: float
    grid_max: float
    points: int

    def grid(self) -> np.ndarray:
        return np.linspace(self.grid_min, self.grid_max, self.points)


PRESETS = {
    "h2": MoleculeSpec("H2", "STO-3G", "bravyi_kitaev", 2, 0.25, 2.85, 54),
    "lih": MoleculeSpec("LiH", "STO-6G", "paired", 3, 0.3, 5.0, 50),
    "hehp": MoleculeSpec("HeH+", "STO-3G", "jordan_wigner", 4, 0.25, 2.5, 30),
}


def _pairs(n):
    return list(itertools.combinations(range(n), 2))


def template_words(name: str) -> set[str]:
    """Pauli words allowed in each molecule's published term structure."""
    if name == "H2":
        return {"II", "ZI", "IZ", "ZZ", "XX", "YY"}
    if name == "LiH":
        words = {"III"}
        for q in range(3):
            words.add("".join("Z" if i == q else "I" for i in range(3)))
        for a, b in _pairs(3):
            for letter in "ZXY":
                words.add("".join(letter if i in (a, b) else "I" for i in range(3)))
        return words
    if name == "HeH+":
        words = {"IIII"}
        for q in range(4):
            words.add("".join("Z" if i == q else "I" for i in range(4)))
        for a, b in _pairs(4):
            for letter in "ZXY":
                words.add("".join(letter if i in (a, b) else "I" for i in range(4)))
        for i in (0, 1):
            for letter in "XY":
                word = ["I"] * 4
                word[i], word[i + 1], word[i + 2] = letter, "Z", letter
                words.add("".join(word))
        words |= {"XXYY", "YYXX", "XYYX", "YXXY", "XZXZ", "ZXZX", "YZYZ", "ZYZY"}
        return words
    raise ValueError(f"unknown molecule {name!r}")


class TemplateError(ValueError):
    pass


def check_template(name: str, op: dict) -> None:
    allowed = template_words(name)
    unexpected = sorted(set(op) - allowed)
    if unexpected:
        raise TemplateError(
            f"{name}: generated Hamiltonian has terms outside the template: {unexpected}"
        )
    imag = max((abs(c.imag) for c in op.values()), default=0.0)
    if imag > 1e-10:
        raise TemplateError(f"{name}: non-real Pauli coefficient (imag {imag:.2e})")


# ---------------------------------------------------------------------------
# Per-molecule qubit Hamiltonians


def _h2_qubit_operator(bond: float) -> dict:
    atoms = [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, bond))]
    scf = rhf(atoms, "STO-3G")
    h1, g2 = mo_integrals(scf, [0, 1])
    # blocked spin ordering makes the up-spin and total parities sit on
    # two fixed qubits of the encoded register
    jw = qubit.second_quantized(h1, g2, ordering="blocked")
    jw["I" * 4] = jw.get("I" * 4, 0.0) + scf.e_nuclear
    bk = qubit.bk_transform(jw, 4)
    reference = qubit.bk_bits([1, 0, 1, 0], 4)  # lowest orbital doubly occupied
    reduced, kept, ref_bits = qubit.taper(bk, reference)
    if len(kept) != 2:
        raise TemplateError(f"H2: expected 2 qubits after tapering, kept {kept}")
    return reduced, ref_bits


def _orient_h2(op: dict, ref_bits: str) -> dict:
    """Relabel the tapered register so the ground state spans |01>,|10>
    with the mean-field configuration on |01>."""
    candidates = []
    for do_swap in (False, True):
        base = qubit.swap_qubits(op) if do_swap else op
        for flips in ((), (0,), (1,), (0, 1)):
            out = base
            for q in flips:
                out = qubit.conjugate_x(out, q)
            candidates.append(out)
    for out in candidates:
        mat = qubit.dense(out, 2).real
        if abs(mat[0, 1]) + abs(mat[0, 2]) + abs(mat[3, 1]) + abs(mat[3, 2]) > 1e-10:
            continue
        vals, vecs = np.linalg.eigh(mat)
        ground = vecs[:, 0]
        if abs(ground[0]) ** 2 + abs(ground[3]) ** 2 > 1e-10:
            continue
        if abs(ground[1]) >= abs(ground[2]):
            return out
    raise TemplateError("H2: no register orientation places the ground state on span{01,10}")


def _lih_qubit_operator(bond: float) -> dict:
    atoms = [("Li", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, bond))]
    scf = rhf(atoms, "STO-6G")
    # sigma/pi classification: p_x, p_y AOs are indices 2 and 3 of the
    # Li-centered shell list (1s, 2s, 2px, 2py, 2pz, H 1s)
    pi_weight = np.abs(scf.mo_coeffs[2]) + np.abs(scf.mo_coeffs[3])
    sigma = [i for i in range(6) if pi_weight[i] < 1e-8]
    pi = [i for i in range(6) if pi_weight[i] >= 1e-8]
    if len(pi) != 2:
        raise TemplateError(f"LiH: expected 2 pi orbitals, found {len(pi)}")
    core, active = sigma[0], sigma[1:4]
    h_eff, g_active, e_frozen = frozen_core_reduction(scf, [core], active)
    op = qubit.pair_hamiltonian(h_eff, g_active)
    op["I" * 3] = op.get("I" * 3, 0.0) + e_frozen
    return qubit.op_clean(op)


def _hehp_qubit_operator(bond: float) -> dict:
    atoms = [("He", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, bond))]
    scf = rhf(atoms, "STO-3G", charge=1)
    h1, g2 = mo_integrals(scf, [0, 1])
    op = qubit.second_quantized(h1, g2, ordering="interleaved")
    op["I" * 4] = op.get("I" * 4, 0.0) + scf.e_nuclear
    # reverse the mode order so the mean-field configuration (lowest
    # orbital doubly occupied) reads |0011>; the template is inversion
    # symmetric so the allowed word set is unchanged
    return qubit.op_clean({w[::-1]: c for w, c in op.items()})


def qubit_operator(spec: MoleculeSpec, bond: float, h2_orientation=None) -> dict:
    if spec.name == "H2":
        reduced, ref_bits = _h2_qubit_operator(bond)
        if h2_orientation is None:
            return _orient_h2(reduced, ref_bits)
        return h2_orientation(reduced)
    if spec.name == "LiH":
        return _lih_qubit_operator(bond)
    if spec.name == "HeH+":
        return _hehp_qubit_operator(bond)
    raise ValueError(f"unknown molecule {spec.name!r}")


def generate(spec: MoleculeSpec, out_path) -> dict:
    """Run the scan and write the family file; returns the JSON document."""
    points = []
    orientation = None
    for bond in spec.grid():
        if spec.name == "H2":
            reduced, ref_bits = _h2_qubit_operator(float(bond))
            if orientation is None:
                oriented = _orient_h2(reduced, ref_bits)
                # freeze the relabeling chosen at the first grid point
                chosen = [
                    (do_swap, flips)
                    for do_swap in (False, True)
                    for flips in ((), (0,), (1,), (0, 1))
                ]
                for do_swap, flips in chosen:
                    cand = qubit.swap_qubits(reduced) if do_swap else reduced
                    for q in flips:
                        cand = qubit.conjugate_x(cand, q)
                    if qubit.op_clean({w: cand.get(w, 0) - oriented.get(w, 0) for w in set(cand) | set(oriented)}, 1e-10) == {}:
                        def orientation(op, _swap=do_swap, _flips=flips):
                            out = qubit.swap_qubits(op) if _swap else op
                            for q in _flips:
                                out = qubit.conjugate_x(out, q)
                            return out
                        break
                op = oriented
            else:
                op = orientation(reduced)
        else:
            op = qubit_operator(spec, float(bond))
        op = qubit.op_clean(op, 1e-12)
        check_template(spec.name, op)
        points.append(
            {
                "lambda": float(bond),
                "terms": [
                    {"coeff": float(op[w].real), "pauli": w} for w in sorted(op)
                ],
            }
        )
    doc = {
        "n_qubits": spec.n_qubits,
        "parameter_name": "bond_length_au",
        "points": points,
    }
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    return doc
