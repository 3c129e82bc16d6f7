"""Restricted Hartree-Fock for small closed-shell molecules.

Canonical orthogonalization guards against near-linear-dependent bases
at short bond lengths; DIIS extrapolation with a damping fallback keeps
stretched geometries convergent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import CHARGE, build_basis
from .integrals import integral_tables


@dataclass
class SCFResult:
    energy: float
    e_nuclear: float
    mo_coeffs: np.ndarray  # orthonormal MOs, columns, ascending energy
    mo_energies: np.ndarray
    h_core: np.ndarray
    eri: np.ndarray  # (pq|rs) over AOs, chemists' notation
    overlap: np.ndarray
    n_electrons: int
    converged: bool


def nuclear_repulsion(atoms) -> float:
    e = 0.0
    for i, (el_i, ri) in enumerate(atoms):
        for el_j, rj in atoms[i + 1 :]:
            e += CHARGE[el_i] * CHARGE[el_j] / np.linalg.norm(np.asarray(ri) - np.asarray(rj))
    return e


def rhf(atoms, basis: str, charge: int = 0, max_iters: int = 300, tol: float = 1e-10) -> SCFResult:
    """atoms: [(element, (x, y, z)), ...] in bohr."""
    functions = build_basis(atoms, basis)
    charges = [(CHARGE[el], r) for el, r in atoms]
    S, T, V, G = integral_tables(functions, charges)
    h = T + V
    n_electrons = sum(CHARGE[el] for el, _ in atoms) - charge
    if n_electrons % 2:
        raise ValueError("restricted SCF needs an even electron count")
    n_occ = n_electrons // 2

    s_val, s_vec = np.linalg.eigh(S)
    keep = s_val > 1e-10
    X = s_vec[:, keep] / np.sqrt(s_val[keep])

    def diagonalize(F):
        f_ortho = X.T @ F @ X
        eps, c_ortho = np.linalg.eigh(f_ortho)
        return eps, X @ c_ortho

    eps, C = diagonalize(h)
    D = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
    e_nuc = nuclear_repulsion(atoms)

    errors, focks = [], []
    energy = 0.0
    converged = False
    for iteration in range(max_iters):
        J = np.einsum("pqrs,rs->pq", G, D)
        K = np.einsum("prqs,rs->pq", G, D)
        F = h + J - 0.5 * K
        err = F @ D @ S - S @ D @ F
        energy_new = 0.5 * np.sum(D * (h + F)) + e_nuc
        if np.abs(err).max() < tol and iteration > 0:
            energy = energy_new
            converged = True
            break
        errors.append(err)
        focks.append(F)
        if len(errors) > 8:
            errors.pop(0)
            focks.pop(0)
        if len(errors) > 1:
            m = len(errors)
            B = -np.ones((m + 1, m + 1))
            B[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    B[i, j] = np.sum(errors[i] * errors[j])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                weights = np.linalg.solve(B, rhs)[:m]
                F = sum(w * f for w, f in zip(weights, focks))
            except np.linalg.LinAlgError:
                pass
        eps, C = diagonalize(F)
        D_new = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
        if iteration < 2:
            D_new = 0.5 * (D_new + D)  # damp the first steps
        D = D_new
        energy = energy_new

    if not converged:
        raise ArithmeticError(f"SCF did not converge within {max_iters} iterations for {atoms}")
    return SCFResult(float(energy), e_nuc, C, eps, h, G, S, n_electrons, converged)


def mo_integrals(result: SCFResult, mo_indices) -> tuple[np.ndarray, np.ndarray]:
    """One- and two-electron integrals over the selected MOs."""
    C = result.mo_coeffs[:, list(mo_indices)]
    h1 = C.T @ result.h_core @ C
    g2 = np.einsum("pi,qj,pqrs,rk,sl->ijkl", C, C, result.eri, C, C, optimize=True)
    return h1, g2


def frozen_core_reduction(result: SCFResult, frozen, active):
    """Effective one-body integrals and scalar offset for the active
    space (frozen orbitals doubly occupied)."""
    h1_full, g2_full = mo_integrals(result, list(frozen) + list(active))
    nf = len(frozen)
    e_frozen = result.e_nuclear
    for c in range(nf):
        e_frozen += 2.0 * h1_full[c, c]
        for d in range(nf):
            e_frozen += 2.0 * g2_full[c, c, d, d] - g2_full[c, d, c, d]
    na = len(active)
    h_eff = np.array(h1_full[nf:, nf:])
    for p in range(na):
        for q in range(na):
            for c in range(nf):
                h_eff[p, q] += 2.0 * g2_full[nf + p, nf + q, c, c] - g2_full[nf + p, c, nf + q, c]
    g_active = g2_full[nf:, nf:, nf:, nf:]
    return h_eff, g_active, float(e_frozen)
