"""One- and two-electron integrals over contracted Cartesian Gaussians.

McMurchie-Davidson scheme: products of Gaussians are expanded in Hermite
Gaussians (coefficients E), Coulomb integrals reduce to the Boys
function through the Hermite Coulomb tensor R.  Everything is vectorized
over primitive pairs, which keeps an STO-6G LiH scan fast enough in
plain numpy.
"""

from __future__ import annotations

import numpy as np

from .basis import BasisFunction


def boys(n_max: int, T: np.ndarray) -> np.ndarray:
    """F_m(T) for m = 0..n_max, shape (n_max+1, *T.shape).

    Small T: converged downward recursion seeded by the series for
    F_{n_max}; large T: asymptotic closed form (error < exp(-35)).
    """
    T = np.atleast_1d(np.asarray(T, dtype=float))
    out = np.empty((n_max + 1,) + T.shape)
    small = T < 35.0
    Ts = np.where(small, T, 0.0)
    # series for F_{n_max}: exp(-T) sum_k (2T)^k (2n-1)!! / (2n+2k+1)!!
    term = np.ones_like(Ts) / (2 * n_max + 1)
    acc = term.copy()
    for k in range(1, 200):
        term = term * 2 * Ts / (2 * n_max + 2 * k + 1)
        acc += term
        if term.max() < 1e-17:
            break
    f_top = np.exp(-Ts) * acc
    Tl = np.where(small, 1.0, T)
    double_fact = 1.0
    for m in range(1, n_max + 1):
        double_fact *= 2 * m - 1
    f_top_large = double_fact / (2 * Tl) ** n_max * 0.5 * np.sqrt(np.pi / Tl)
    out[n_max] = np.where(small, f_top, f_top_large)
    expT = np.exp(-np.minimum(T, 700.0))
    for m in range(n_max - 1, -1, -1):
        out[m] = (2 * T * out[m + 1] + expT) / (2 * m + 1)
    return out


def _hermite_e(la: int, lb: int, Q: np.ndarray, a: np.ndarray, b: np.ndarray) -> dict:
    """Hermite expansion coefficients E[(i, j, t)] for one dimension,
    vectorized over primitive pairs (a, b arrays)."""
    p = a + b
    q = a * b / p
    E = {(0, 0, 0): np.exp(-q * Q * Q)}

    def get(i, j, t):
        if t < 0 or t > i + j or i < 0 or j < 0:
            return 0.0
        if (i, j, t) not in E:
            if i > 0:
                E[(i, j, t)] = (
                    get(i - 1, j, t - 1) / (2 * p)
                    - (q * Q / a) * get(i - 1, j, t)
                    + (t + 1) * get(i - 1, j, t + 1)
                )
            else:
                E[(i, j, t)] = (
                    get(i, j - 1, t - 1) / (2 * p)
                    + (q * Q / b) * get(i, j - 1, t)
                    + (t + 1) * get(i, j - 1, t + 1)
                )
        return E[(i, j, t)]

    for i in range(la + 1):
        for j in range(lb + 1):
            for t in range(i + j + 1):
                get(i, j, t)
    return E


def _prim_norm(l: int, a: np.ndarray) -> np.ndarray:
    # Cartesian x^l Gaussian normalization for l <= 1
    n = (2 * a / np.pi) ** 0.75
    return n if l == 0 else n * 2 * np.sqrt(a)


class Pair:
    """All primitive-pair data for a pair of contracted functions."""

    def __init__(self, fa: BasisFunction, fb: BasisFunction):
        a = np.repeat(fa.exps, fb.exps.size)
        b = np.tile(fb.exps, fa.exps.size)
        ca = np.repeat(fa.coeffs * _prim_norm(fa.l_total, fa.exps), fb.exps.size)
        cb = np.tile(fb.coeffs * _prim_norm(fb.l_total, fb.exps), fa.exps.size)
        self.fa, self.fb = fa, fb
        self.p = a + b
        self.pref = ca * cb
        A = np.asarray(fa.center)
        B = np.asarray(fb.center)
        self.P = (a[:, None] * A + b[:, None] * B) / self.p[:, None]
        self.E = [
            _hermite_e(fa.lmn[d], fb.lmn[d], A[d] - B[d], a, b) for d in range(3)
        ]
        self.a, self.b = a, b

    def hermite_terms(self):
        """Yield (t, u, v, coefficient array) of the Hermite expansion."""
        la, lb = self.fa.lmn, self.fb.lmn
        for t in range(la[0] + lb[0] + 1):
            for u in range(la[1] + lb[1] + 1):
                for v in range(la[2] + lb[2] + 1):
                    yield t, u, v, (
                        self.E[0][(la[0], lb[0], t)]
                        * self.E[1][(la[1], lb[1], u)]
                        * self.E[2][(la[2], lb[2], v)]
                    )


def overlap(fa: BasisFunction, fb: BasisFunction) -> float:
    pair = Pair(fa, fb)
    s = 1.0
    for d in range(3):
        s = s * pair.E[d][(fa.lmn[d], fb.lmn[d], 0)]
    return float(np.sum(pair.pref * s * (np.pi / pair.p) ** 1.5))


def kinetic(fa: BasisFunction, fb: BasisFunction) -> float:
    pair = Pair(fa, fb)
    b = pair.b

    def s1d(d, i, j):
        if i < 0 or j < 0:
            return 0.0
        E = _hermite_e(i, j, fa.center[d] - fb.center[d], pair.a, b)
        return E[(i, j, 0)]

    total = np.zeros_like(pair.p)
    for d in range(3):
        i, j = fa.lmn[d], fb.lmn[d]
        k1d = (
            -2.0 * b**2 * s1d(d, i, j + 2)
            + b * (2 * j + 1) * s1d(d, i, j)
            - 0.5 * j * (j - 1) * s1d(d, i, j - 2)
        )
        rest = np.ones_like(pair.p)
        for e in range(3):
            if e != d:
                rest = rest * s1d(e, fa.lmn[e], fb.lmn[e])
        total = total + k1d * rest
    return float(np.sum(pair.pref * total * (np.pi / pair.p) ** 1.5))


def _hermite_R(n_max: int, p: np.ndarray, PC: np.ndarray) -> dict:
    """Hermite Coulomb tensor R[(t, u, v)] at auxiliary order 0,
    vectorized over the leading axis of p / PC."""
    T = p * np.sum(PC * PC, axis=-1)
    F = boys(n_max, T)
    base = {n: (-2.0 * p) ** n * F[n] for n in range(n_max + 1)}
    memo = {}

    def R(n, t, u, v):
        if t < 0 or u < 0 or v < 0:
            return 0.0
        if t == u == v == 0:
            return base[n]
        key = (n, t, u, v)
        if key not in memo:
            if t > 0:
                memo[key] = (t - 1) * R(n + 1, t - 2, u, v) + PC[..., 0] * R(n + 1, t - 1, u, v)
            elif u > 0:
                memo[key] = (u - 1) * R(n + 1, t, u - 2, v) + PC[..., 1] * R(n + 1, t, u - 1, v)
            else:
                memo[key] = (v - 1) * R(n + 1, t, u, v - 2) + PC[..., 2] * R(n + 1, t, u, v - 1)
        return memo[key]

    out = {}
    for t in range(n_max + 1):
        for u in range(n_max + 1 - t):
            for v in range(n_max + 1 - t - u):
                out[(t, u, v)] = R(0, t, u, v)
    return out


def nuclear(fa: BasisFunction, fb: BasisFunction, charges) -> float:
    """Nuclear attraction -sum_A Z_A <a| 1/|r - R_A| |b>."""
    pair = Pair(fa, fb)
    n_max = fa.l_total + fb.l_total
    total = np.zeros_like(pair.p)
    for Z, center in charges:
        PC = pair.P - np.asarray(center)
        R = _hermite_R(n_max, pair.p, PC)
        acc = np.zeros_like(pair.p)
        for t, u, v, coeff in pair.hermite_terms():
            acc = acc + coeff * R[(t, u, v)]
        total = total - Z * acc
    return float(np.sum(pair.pref * (2 * np.pi / pair.p) * total))


def eri(fa, fb, fc, fd) -> float:
    """Two-electron repulsion integral (ab|cd) in chemists' notation."""
    bra = Pair(fa, fb)
    ket = Pair(fc, fd)
    n_bra = fa.l_total + fb.l_total
    n_ket = fc.l_total + fd.l_total
    p = bra.p[:, None]
    q = ket.p[None, :]
    omega = p * q / (p + q)
    PQ = bra.P[:, None, :] - ket.P[None, :, :]
    R = _hermite_R(n_bra + n_ket, omega, PQ)
    total = np.zeros((bra.p.size, ket.p.size))
    for t, u, v, cb in bra.hermite_terms():
        for t2, u2, v2, ck in ket.hermite_terms():
            sign = -1.0 if (t2 + u2 + v2) % 2 else 1.0
            total = total + sign * np.asarray(cb)[:, None] * np.asarray(ck)[None, :] * R[(t + t2, u + u2, v + v2)]
    pref = 2 * np.pi**2.5 / (p * q * np.sqrt(p + q))
    return float(np.sum(bra.pref[:, None] * ket.pref[None, :] * pref * total))


def integral_tables(functions, atoms_charges):
    """S, T, V matrices and the full (pq|rs) tensor, with contracted
    functions renormalized to unit self-overlap."""
    n = len(functions)
    raw_norm = np.array([overlap(f, f) for f in functions])
    scale = 1.0 / np.sqrt(raw_norm)

    S = np.empty((n, n))
    T = np.empty((n, n))
    V = np.empty((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = overlap(functions[i], functions[j]) * scale[i] * scale[j]
            T[i, j] = T[j, i] = kinetic(functions[i], functions[j]) * scale[i] * scale[j]
            V[i, j] = V[j, i] = nuclear(functions[i], functions[j], atoms_charges) * scale[i] * scale[j]

    G = np.zeros((n, n, n, n))
    done = np.zeros((n, n, n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1):
            for k in range(n):
                for l in range(k + 1):
                    if (i * (i + 1) // 2 + j) < (k * (k + 1) // 2 + l):
                        continue
                    if done[i, j, k, l]:
                        continue
                    val = eri(functions[i], functions[j], functions[k], functions[l])
                    val *= scale[i] * scale[j] * scale[k] * scale[l]
                    for a, b in ((i, j), (j, i)):
                        for c, d in ((k, l), (l, k)):
                            G[a, b, c, d] = G[c, d, a, b] = val
                            done[a, b, c, d] = done[c, d, a, b] = True
    return S, T, V, G
