"""Minimal STO-nG basis sets for H, He and Li.

Published least-squares expansions are used where they are tabulated
offline (all STO-3G sets, the universal STO-6G 1s set).  The shared
2s/2p STO-6G expansion is reproduced by the same overlap-maximization
fit that generated the historical tables; fit_sto_sp(3) recovers the
published STO-3G sp set to five figures, which validates the method.
Exponents of a zeta=1 expansion scale by zeta**2, contraction
coefficients (weights of normalized primitives) are scale invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

# universal zeta = 1 expansions
_STO3G_1S = (
    np.array([2.227660584, 0.405771156, 0.109818]),
    np.array([0.154328967, 0.535328142, 0.444634542]),
)
_STO6G_1S = (
    np.array([23.10303149, 4.235915534, 1.185056519, 0.4070988982, 0.1580884151, 0.06510953954]),
    np.array([0.00916359628, 0.04936149294, 0.1685383049, 0.3705627997, 0.4164915298, 0.1303340841]),
)
_STO3G_2SP = (
    np.array([0.994203, 0.231031, 0.0751386]),
    np.array([-0.09996723, 0.39951283, 0.70011547]),
    np.array([0.15591627, 0.60768372, 0.39195739]),
)
# overlap-maximization fit, frozen output of fit_sto_sp(6)
_STO6G_2SP = (
    np.array([10.30867090, 2.04035569, 0.63414129, 0.24397712, 0.10595947, 0.04856899]),
    np.array([-0.01325282, -0.04699177, -0.03378521, 0.25024219, 0.59511711, 0.24070584]),
    np.array([0.00375971, 0.03767947, 0.17389702, 0.41803653, 0.42585922, 0.10170813]),
)

# standard molecular Slater exponents
ZETA = {("H", "1s"): 1.24, ("He", "1s"): 1.69, ("Li", "1s"): 2.69, ("Li", "2sp"): 0.80}

CHARGE = {"H": 1, "He": 2, "Li": 3}


@dataclass(frozen=True)
class BasisFunction:
    """One contracted Cartesian Gaussian: sum_k c_k x^lx y^ly z^lz exp(-a_k r^2)."""

    center: tuple[float, float, float]
    lmn: tuple[int, int, int]
    exps: np.ndarray
    coeffs: np.ndarray

    @property
    def l_total(self) -> int:
        return sum(self.lmn)


def _shells_for(element: str, basis: str):
    if basis == "STO-3G":
        one_s, sp = _STO3G_1S, _STO3G_2SP
    elif basis == "STO-6G":
        one_s, sp = _STO6G_1S, _STO6G_2SP
    else:
        raise ValueError(f"unsupported basis {basis!r}")
    z1 = ZETA[(element, "1s")] ** 2
    shells = [("s", one_s[0] * z1, one_s[1])]
    if element == "Li":
        z2 = ZETA[("Li", "2sp")] ** 2
        shells.append(("s", sp[0] * z2, sp[1]))
        shells.append(("p", sp[0] * z2, sp[2]))
    return shells


def build_basis(atoms, basis: str) -> list[BasisFunction]:
    """Cartesian basis functions for [(element, center), ...]."""
    functions = []
    for element, center in atoms:
        for kind, exps, coeffs in _shells_for(element, basis):
            if kind == "s":
                functions.append(BasisFunction(tuple(center), (0, 0, 0), exps, coeffs))
            else:
                for lmn in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    functions.append(BasisFunction(tuple(center), lmn, exps, coeffs))
    return functions


# ---------------------------------------------------------------------------
# Overlap-maximization fit of STO-nG expansions (validation + provenance)

_R = np.linspace(1e-6, 60.0, 40000)
_W = np.gradient(_R)


def _norm(f):
    return f / np.sqrt(np.sum(f * f * _R * _R * _W))


def _best_overlap(shapes, target):
    S = np.array([[np.sum(a * b * _R * _R * _W) for b in shapes] for a in shapes])
    v = np.array([np.sum(a * target * _R * _R * _W) for a in shapes])
    c = np.linalg.solve(S, v)
    s2 = float(v @ c)
    return s2, c / np.sqrt(c @ S @ c)


def fit_sto_sp(n: int):
    """Fit n shared Gaussian exponents to the zeta=1 Slater 2s and 2p
    radial shapes, maximizing the summed squared overlaps.

    Returns (exponents, 2s coefficients, 2p coefficients), the quantity
    frozen into the module tables."""
    sto = _norm(_R * np.exp(-_R))

    def objective(log_a):
        a = np.exp(log_a)
        s_shapes = [_norm(np.exp(-ai * _R * _R)) for ai in a]
        p_shapes = [_norm(_R * np.exp(-ai * _R * _R)) for ai in a]
        return -(_best_overlap(s_shapes, sto)[0] + _best_overlap(p_shapes, sto)[0])

    x0 = np.log(np.geomspace(28.0, 0.045, n)) if n > 3 else np.log([1.0, 0.23, 0.075])
    res = minimize(objective, x0, method="Nelder-Mead",
                   options=dict(maxiter=8000, xatol=1e-10, fatol=1e-14))
    a = np.sort(np.exp(res.x))[::-1]
    s_shapes = [_norm(np.exp(-ai * _R * _R)) for ai in a]
    p_shapes = [_norm(_R * np.exp(-ai * _R * _R)) for ai in a]
    return a, _best_overlap(s_shapes, sto)[1], _best_overlap(p_shapes, sto)[1]
