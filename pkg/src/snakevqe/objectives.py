"""Families of objectives indexed by a member m over a shared parameter space.

The snake optimizer only sees this contract: M members, K parameters,
value(m, theta), gradient(m, theta), and label(m) giving each member's
lambda (or t).  Three realizations: variational quantum energies, the
Styblinski-Tang benchmark family, and a convex quadratic test family.
"""

from __future__ import annotations

import numpy as np

from . import ansatz as ansatz_lib
from .pauli import HamiltonianFamily
from .statevector import _expect_word


class ObjectiveFamily:
    """Base contract; value/gradient are pure and deterministic.

    init_range is the default box for random initialization of one
    parameter component.  Subclasses may override the *_all methods with
    vectorized versions; the defaults loop.
    """

    M: int
    K: int
    init_range: tuple[float, float] = (-1.0, 1.0)

    def label(self, m: int) -> float:
        raise NotImplementedError

    def value(self, m: int, theta) -> float:
        raise NotImplementedError

    def gradient(self, m: int, theta) -> np.ndarray:
        raise NotImplementedError

    def labels(self) -> np.ndarray:
        return np.array([self.label(m) for m in range(self.M)])

    def value_all(self, Theta: np.ndarray) -> np.ndarray:
        return np.array([self.value(m, Theta[m]) for m in range(self.M)])

    def gradient_all(self, Theta: np.ndarray) -> np.ndarray:
        return np.stack([self.gradient(m, Theta[m]) for m in range(self.M)])


# ---------------------------------------------------------------------------
# Styblinski-Tang benchmark


def st_value(x: float, t: float) -> float:
    """f(x; t) = (x^4 - 16 x^2 + t x) / 2."""
    return 0.5 * (x**4 - 16.0 * x**2 + t * x)


def st_gradient(x: float, t: float) -> float:
    """df/dx = (4 x^3 - 32 x + t) / 2."""
    return 0.5 * (4.0 * x**3 - 32.0 * x + t)


def st_minima(t: float) -> tuple[float, float]:
    """The two minima (x_global, x_local) of f(.; t) for 0 <= t <= 6.

    The stationary points are the real roots of 4 x^3 - 32 x + t; the
    outer two are minima and for t > 0 the negative one is global.  Roots
    are polished with Newton steps to ~1e-12.
    """
    if not 0.0 <= t <= 6.0:
        raise ValueError(f"t must be in [0, 6], got {t}")
    roots = np.roots([4.0, 0.0, -32.0, t])
    roots = np.sort(np.real(roots[np.abs(np.imag(roots)) < 1e-9]))
    if roots.size != 3:
        raise ArithmeticError(f"expected 3 real stationary points, got {roots}")
    polished = []
    for r in (roots[0], roots[2]):
        for _ in range(3):
            r = r - (4.0 * r**3 - 32.0 * r + t) / (12.0 * r**2 - 32.0)
        polished.append(float(r))
    return polished[0], polished[1]


def st_barrier(t: float) -> float:
    """The middle stationary point: the boundary between the two basins."""
    roots = np.roots([4.0, 0.0, -32.0, t])
    roots = np.sort(np.real(roots[np.abs(np.imag(roots)) < 1e-9]))
    return float(roots[1])


class STFamily(ObjectiveFamily):
    """One-dimensional Styblinski-Tang members f(x; t_m) on a t grid."""

    K = 1
    init_range = (-4.0, 4.0)

    def __init__(self, t_grid):
        t_grid = np.asarray(t_grid, dtype=float)
        if t_grid.ndim != 1 or t_grid.size < 1:
            raise ValueError("t_grid must be a non-empty 1-d array")
        if np.any(np.diff(t_grid) <= 0):
            raise ValueError("t_grid must be strictly increasing")
        if t_grid[0] < 0.0 or t_grid[-1] > 6.0:
            raise ValueError("t_grid must lie inside [0, 6]")
        self.t_grid = t_grid
        self.M = t_grid.size

    @classmethod
    def default(cls, M: int = 61, t_min: float = 0.0, t_max: float = 6.0) -> "STFamily":
        return cls(np.linspace(t_min, t_max, M))

    def label(self, m):
        return float(self.t_grid[m])

    def value(self, m, theta):
        return st_value(float(np.asarray(theta).reshape(())), self.t_grid[m])

    def gradient(self, m, theta):
        x = float(np.asarray(theta).reshape(()))
        return np.array([st_gradient(x, self.t_grid[m])])

    def value_all(self, Theta):
        x = np.asarray(Theta, dtype=float).reshape(self.M)
        return 0.5 * (x**4 - 16.0 * x**2 + self.t_grid * x)

    def gradient_all(self, Theta):
        x = np.asarray(Theta, dtype=float).reshape(self.M)
        return (0.5 * (4.0 * x**3 - 32.0 * x + self.t_grid))[:, None]


# ---------------------------------------------------------------------------
# Variational quantum energy families


class VQEFamily(ObjectiveFamily):
    """Member m is the ansatz energy against the family's m-th Hamiltonian.

    All members share the ansatz, so values and shift-rule gradients for
    the whole family are evaluated in one batched simulator call per
    Pauli word.
    """

    init_range = (-np.pi, np.pi)

    def __init__(self, family: HamiltonianFamily, ansatz: "ansatz_lib.Ansatz"):
        if family.n_qubits != ansatz.n_qubits:
            raise ValueError(
                f"qubit mismatch: family has {family.n_qubits}, ansatz has {ansatz.n_qubits}"
            )
        self.family = family
        self.ansatz = ansatz
        self.M = family.M
        self.K = ansatz.n_params
        words = sorted({str(w) for _, h in family.points for _, w in h.terms})
        coeffs = np.zeros((self.M, len(words)))
        index = {w: j for j, w in enumerate(words)}
        for m, (_, h) in enumerate(family.points):
            for c, w in h.terms:
                coeffs[m, index[str(w)]] = c
        self._words = words
        self._coeffs = coeffs

    def label(self, m):
        return float(self.family.points[m][0])

    def value(self, m, theta):
        return ansatz_lib.energy_at(self.ansatz, self.family.points[m][1], theta)

    def gradient(self, m, theta):
        return ansatz_lib.gradient(self.ansatz, self.family.points[m][1], theta)

    def _energies(self, Theta, shift_gate=-1, shift=0.0):
        amps = ansatz_lib._prepare_amps(self.ansatz, Theta, shift_gate, shift)
        total = np.zeros(Theta.shape[0])
        for j, word in enumerate(self._words):
            total += self._coeffs[:, j] * _expect_word(amps, word)
        return total

    def value_all(self, Theta):
        Theta = np.asarray(Theta, dtype=float).reshape(self.M, self.K)
        return self._energies(Theta)

    def gradient_all(self, Theta):
        Theta = np.asarray(Theta, dtype=float).reshape(self.M, self.K)
        grad = np.zeros((self.M, self.K))
        for g_idx, gate in enumerate(self.ansatz.gates):
            plus = self._energies(Theta, g_idx, np.pi / 4)
            minus = self._energies(Theta, g_idx, -np.pi / 4)
            grad[:, gate.param_index] += gate.scale * (plus - minus)
        return grad


# ---------------------------------------------------------------------------
# Convex test family


class QuadraticFamily(ObjectiveFamily):
    """Member m is the paraboloid |theta - center_m|^2 / 2."""

    def __init__(self, centers):
        centers = np.asarray(centers, dtype=float)
        if centers.ndim != 2:
            raise ValueError("centers must have shape (M, K)")
        self.centers = centers
        self.M, self.K = centers.shape

    def label(self, m):
        return float(m)

    def value(self, m, theta):
        d = np.asarray(theta, dtype=float) - self.centers[m]
        return float(0.5 * d @ d)

    def gradient(self, m, theta):
        return np.asarray(theta, dtype=float) - self.centers[m]

    def value_all(self, Theta):
        d = np.asarray(Theta, dtype=float) - self.centers
        return 0.5 * np.sum(d * d, axis=1)

    def gradient_all(self, Theta):
        return np.asarray(Theta, dtype=float) - self.centers
