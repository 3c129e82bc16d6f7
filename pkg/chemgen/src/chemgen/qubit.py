"""Fermion-to-qubit mappings producing Pauli-term dictionaries.

Operators are dicts mapping Pauli words (one letter per qubit, leftmost
letter on qubit 0) to complex coefficients.  The Jordan-Wigner route
multiplies ladder operators symbolically; the Bravyi-Kitaev route is a
computational-basis relabeling of the Jordan-Wigner matrix followed by a
fresh Pauli expansion, with conserved Z-only qubits tapered off.  Both
are cross-checked against a determinant-basis configuration-interaction
matrix built directly with fermionic sign bookkeeping.
"""

from __future__ import annotations

import numpy as np

_MUL = {
    ("I", "I"): (1, "I"), ("I", "X"): (1, "X"), ("I", "Y"): (1, "Y"), ("I", "Z"): (1, "Z"),
    ("X", "I"): (1, "X"), ("X", "X"): (1, "I"), ("X", "Y"): (1j, "Z"), ("X", "Z"): (-1j, "Y"),
    ("Y", "I"): (1, "Y"), ("Y", "X"): (-1j, "Z"), ("Y", "Y"): (1, "I"), ("Y", "Z"): (1j, "X"),
    ("Z", "I"): (1, "Z"), ("Z", "X"): (1j, "Y"), ("Z", "Y"): (-1j, "X"), ("Z", "Z"): (1, "I"),
}

_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def word_mul(w1: str, w2: str) -> tuple[complex, str]:
    phase = 1.0 + 0j
    letters = []
    for c1, c2 in zip(w1, w2):
        ph, c = _MUL[(c1, c2)]
        phase *= ph
        letters.append(c)
    return phase, "".join(letters)


def op_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            ph, w = word_mul(w1, w2)
            out[w] = out.get(w, 0.0) + ph * c1 * c2
    return out


def op_add(target: dict, other: dict, factor=1.0) -> None:
    for w, c in other.items():
        target[w] = target.get(w, 0.0) + factor * c


def op_clean(op: dict, tol: float = 1e-12) -> dict:
    return {w: c for w, c in op.items() if abs(c) > tol}


def dense(op: dict, n_qubits: int) -> np.ndarray:
    out = np.zeros((2**n_qubits, 2**n_qubits), dtype=complex)
    for word, coeff in op.items():
        mat = _MATS[word[0]]
        for ch in word[1:]:
            mat = np.kron(mat, _MATS[ch])
        out += coeff * mat
    return out


def pauli_expand(matrix: np.ndarray, tol: float = 1e-12) -> dict:
    """Expand a 2^n x 2^n matrix in the Pauli-word basis."""
    dim = matrix.shape[0]
    n = dim.bit_length() - 1
    out = {}

    def walk(word, mat):
        if len(word) == n:
            coeff = mat[0, 0]
            if abs(coeff) > tol:
                out["".join(word)] = complex(coeff)
            return
        half = mat.shape[0] // 2
        a, b = mat[:half, :half], mat[:half, half:]
        c, d = mat[half:, :half], mat[half:, half:]
        walk(word + ["I"], (a + d) / 2)
        walk(word + ["X"], (b + c) / 2)
        walk(word + ["Y"], (b - c) * 1j / 2)
        walk(word + ["Z"], (a - d) / 2)

    walk([], matrix.astype(complex))
    return out


# ---------------------------------------------------------------------------
# Jordan-Wigner


def jw_lower(j: int, n: int) -> dict:
    """Annihilation operator a_j = Z_0..Z_{j-1} (X_j + i Y_j)/2."""
    x = "Z" * j + "X" + "I" * (n - j - 1)
    y = "Z" * j + "Y" + "I" * (n - j - 1)
    return {x: 0.5, y: 0.5j}


def jw_raise(j: int, n: int) -> dict:
    x = "Z" * j + "X" + "I" * (n - j - 1)
    y = "Z" * j + "Y" + "I" * (n - j - 1)
    return {x: 0.5, y: -0.5j}


def spin_orbital_integrals(h1: np.ndarray, g2: np.ndarray, ordering: str):
    """Map spatial-orbital integrals to spin-orbital mode indices.

    interleaved: mode 2p [spin up], 2p+1 [spin down];
    blocked: modes 0..n-1 spin up then n..2n-1 spin down.
    """
    n = h1.shape[0]

    if ordering == "interleaved":
        def mode(p, spin):
            return 2 * p + spin
    elif ordering == "blocked":
        def mode(p, spin):
            return p + spin * n
    else:
        raise ValueError(f"unknown ordering {ordering!r}")
    return n, mode


def second_quantized(h1: np.ndarray, g2: np.ndarray, ordering: str = "interleaved") -> dict:
    """Jordan-Wigner Pauli form of
    sum h_pq a+_ps a_qs + 1/2 sum (pq|rs) a+_ps a+_rt a_st a_qs."""
    n_orb, mode = spin_orbital_integrals(h1, g2, ordering)
    n_modes = 2 * n_orb
    total: dict = {}
    for p in range(n_orb):
        for q in range(n_orb):
            if abs(h1[p, q]) < 1e-14:
                continue
            for spin in (0, 1):
                term = op_mul(jw_raise(mode(p, spin), n_modes), jw_lower(mode(q, spin), n_modes))
                op_add(total, term, h1[p, q])
    for p in range(n_orb):
        for q in range(n_orb):
            for r in range(n_orb):
                for s in range(n_orb):
                    coeff = g2[p, q, r, s]
                    if abs(coeff) < 1e-14:
                        continue
                    for s1 in (0, 1):
                        for s2 in (0, 1):
                            i, j = mode(p, s1), mode(r, s2)
                            k, l = mode(s, s2), mode(q, s1)
                            if i == j or k == l:
                                continue
                            term = op_mul(
                                op_mul(jw_raise(i, n_modes), jw_raise(j, n_modes)),
                                op_mul(jw_lower(k, n_modes), jw_lower(l, n_modes)),
                            )
                            op_add(total, term, 0.5 * coeff)
    return op_clean(total)


# ---------------------------------------------------------------------------
# Determinant-basis cross-check


def fci_matrix(h1: np.ndarray, g2: np.ndarray, ordering: str = "interleaved") -> np.ndarray:
    """Configuration matrix over occupation bitstrings (mode 0 = most
    significant bit), built by applying ladder operators with explicit
    parity signs.  Independent of the Pauli algebra above."""
    n_orb, mode = spin_orbital_integrals(h1, g2, ordering)
    n_modes = 2 * n_orb
    dim = 2**n_modes

    def bit(state, j):
        return (state >> (n_modes - 1 - j)) & 1

    def parity(state, j):
        count = 0
        for k in range(j):
            count += bit(state, k)
        return -1.0 if count % 2 else 1.0

    def annihilate(state, j):
        if not bit(state, j):
            return None, 0.0
        return state ^ (1 << (n_modes - 1 - j)), parity(state, j)

    def create(state, j):
        if bit(state, j):
            return None, 0.0
        return state ^ (1 << (n_modes - 1 - j)), parity(state, j)

    H = np.zeros((dim, dim))
    for ket in range(dim):
        for p in range(n_orb):
            for q in range(n_orb):
                if abs(h1[p, q]) < 1e-14:
                    continue
                for spin in (0, 1):
                    s1, sign1 = annihilate(ket, mode(q, spin))
                    if s1 is None:
                        continue
                    s2, sign2 = create(s1, mode(p, spin))
                    if s2 is None:
                        continue
                    H[s2, ket] += h1[p, q] * sign1 * sign2
        for p in range(n_orb):
            for q in range(n_orb):
                for r in range(n_orb):
                    for s in range(n_orb):
                        coeff = g2[p, q, r, s]
                        if abs(coeff) < 1e-14:
                            continue
                        for sp1 in (0, 1):
                            for sp2 in (0, 1):
                                i, j = mode(p, sp1), mode(r, sp2)
                                k, l = mode(s, sp2), mode(q, sp1)
                                if i == j or k == l:
                                    continue
                                st, sign = annihilate(ket, l)
                                if st is None:
                                    continue
                                st, sg = annihilate(st, k)
                                sign *= sg
                                if st is None:
                                    continue
                                st, sg = create(st, j)
                                sign *= sg
                                if st is None:
                                    continue
                                st, sg = create(st, i)
                                sign *= sg
                                if st is None:
                                    continue
                                H[st, ket] += 0.5 * coeff * sign
    return H


# ---------------------------------------------------------------------------
# Bravyi-Kitaev via basis relabeling, plus symmetry tapering


def bk_matrix(n_modes: int) -> np.ndarray:
    """Binary partial-sum encoding matrix (recursive doubling)."""
    if n_modes & (n_modes - 1):
        raise ValueError("mode count must be a power of two")
    beta = np.array([[1]], dtype=int)
    while beta.shape[0] < n_modes:
        m = beta.shape[0]
        top = np.hstack([beta, np.zeros((m, m), dtype=int)])
        bottom = np.hstack([np.zeros((m, m), dtype=int), beta])
        bottom[-1, :m] = 1
        beta = np.vstack([top, bottom])
    return beta


def bk_transform(jw_op: dict, n_modes: int) -> dict:
    """Re-express a Jordan-Wigner operator in the Bravyi-Kitaev basis by
    permuting the computational basis with the encoding matrix."""
    beta = bk_matrix(n_modes)
    dim = 2**n_modes
    perm = np.empty(dim, dtype=int)
    for idx in range(dim):
        occ = np.array([(idx >> (n_modes - 1 - j)) & 1 for j in range(n_modes)])
        bits = beta @ occ % 2
        perm[idx] = int("".join(str(b) for b in bits), 2)
    mat = dense(jw_op, n_modes)
    out = np.zeros_like(mat)
    out[np.ix_(perm, perm)] = mat
    return pauli_expand(out)


def bk_bits(occupations, n_modes: int) -> str:
    beta = bk_matrix(n_modes)
    bits = beta @ np.asarray(occupations, dtype=int) % 2
    return "".join(str(int(b)) for b in bits)


def taper(op: dict, reference_bits: str) -> tuple[dict, list[int], str]:
    """Remove qubits on which every word is I or Z, substituting the Z
    eigenvalue of the reference configuration."""
    n = len(reference_bits)
    removable = [
        q for q in range(n) if all(word[q] in "IZ" for word in op)
    ]
    kept = [q for q in range(n) if q not in removable]
    out: dict = {}
    for word, coeff in op.items():
        sign = 1.0
        for q in removable:
            if word[q] == "Z":
                sign *= -1.0 if reference_bits[q] == "1" else 1.0
        reduced = "".join(word[q] for q in kept)
        out[reduced] = out.get(reduced, 0.0) + sign * coeff
    reference = "".join(reference_bits[q] for q in kept)
    return op_clean(out), kept, reference


def conjugate_x(op: dict, qubit: int) -> dict:
    """Conjugate by X on one qubit: Y and Z letters there flip sign."""
    out = {}
    for word, coeff in op.items():
        sign = -1.0 if word[qubit] in "YZ" else 1.0
        out[word] = sign * coeff
    return out


def swap_qubits(op: dict) -> dict:
    return {word[::-1]: coeff for word, coeff in op.items()}


# ---------------------------------------------------------------------------
# Paired-electron (seniority-zero) mapping: one qubit per spatial orbital


def pair_hamiltonian(h1: np.ndarray, g2: np.ndarray) -> dict:
    """Hard-core-boson Hamiltonian of doubly-occupied configurations.

    Diagonal: sum over occupied orbitals of 2 h_pp + J_pp plus the
    inter-pair term 4 J_pq - 2 K_pq; off-diagonal: pair hops K_pq.
    Qubits are ordered so the lowest active orbital is the rightmost
    qubit (the single-pair reference reads |0...01>).
    """
    k = h1.shape[0]
    dim = 2**k
    J = np.einsum("ppqq->pq", g2)
    K = np.einsum("pqqp->pq", g2)
    H = np.zeros((dim, dim))
    for idx in range(dim):
        occ = [p for p in range(k) if (idx >> p) & 1]  # qubit k-1-p ... see below
        e = 0.0
        for p in occ:
            e += 2.0 * h1[p, p] + J[p, p]
            for q in occ:
                if q > p:
                    e += 4.0 * J[p, q] - 2.0 * K[p, q]
        H[idx, idx] = e
        for p in occ:
            for q in range(k):
                if (idx >> q) & 1:
                    continue
                jdx = idx ^ (1 << p) ^ (1 << q)
                H[jdx, idx] += K[p, q]
    return pauli_expand(H)
