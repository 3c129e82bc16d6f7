"""Collective snake optimizer and the plain gradient-descent baseline.

The snake treats the M members of an objective family as points of one
curve in (label, theta) space.  Each parameter component i is a column
r_i of the M x K matrix Theta; one iteration gathers all member
gradients g_i and solves

    (eta * A + I) r_i_new = r_i - eta * g_i

with A the pentadiagonal stiffness matrix built from the stretch weight
alpha and the bend weight beta.  The implicit left side makes arbitrary
stiffness unconditionally stable; at alpha = beta = 0 the update reduces
exactly to independent gradient descent.  An optional decay multiplies A
by exp(-t * gamma) so late iterations anneal toward independent descent.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import cached_property

import numpy as np

BOUNDARIES = ("periodic", "clamped")


@dataclass(frozen=True)
class SnakeConfig:
    alpha: float = 0.1
    beta: float = 3.0
    eta: float = 0.5
    gamma: float = 0.0
    max_iters: int = 2000
    grad_tol: float = 1e-6
    boundary: str = "periodic"
    seed: int = 0
    snapshot_stride: int = 1

    def __post_init__(self):
        for name in ("alpha", "beta", "eta", "gamma", "grad_tol"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
        if self.alpha < 0 or self.beta < 0 or self.gamma < 0:
            raise ValueError("alpha, beta and gamma must be non-negative")
        if self.eta <= 0:
            raise ValueError(f"eta must be positive, got {self.eta}")
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"boundary must be one of {BOUNDARIES}, got {self.boundary!r}")
        if self.max_iters < 0:
            raise ValueError("max_iters must be non-negative")


@dataclass
class SnakeState:
    """M x K parameter matrix (row m is theta at member m) plus the
    iteration counter."""

    theta: np.ndarray
    t: int = 0


@dataclass(frozen=True)
class StiffnessMatrix:
    """Symmetric positive semidefinite coupling matrix of the snake."""

    alpha: float
    beta: float
    boundary: str
    entries: np.ndarray

    @property
    def M(self) -> int:
        return self.entries.shape[0]

    @cached_property
    def spectrum(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigendecomposition, computed once and reused by every solve at
        every decay scale."""
        eigvals, eigvecs = np.linalg.eigh(self.entries)
        return eigvals, eigvecs

    def solve_implicit(self, eta: float, rhs: np.ndarray, scale: float = 1.0) -> np.ndarray:
        """Solve (eta * scale * A + I) x = rhs for all columns of rhs."""
        eigvals, eigvecs = self.spectrum
        inv = 1.0 / (eta * scale * eigvals + 1.0)
        return eigvecs @ (inv[:, None] * (eigvecs.T @ rhs))


def build_A(alpha: float, beta: float, M: int, boundary: str = "periodic") -> StiffnessMatrix:
    """Stiffness matrix for M members.

    periodic: cyclic pentadiagonal with diagonal 2a+6b, first
    off-diagonals -a-4b and second off-diagonals b.  clamped: the Gram
    form a*D1'D1 + b*D2'D2 with one-sided differences at the ends, which
    keeps the interior stencil, symmetry, and positive semidefiniteness.
    Both variants annihilate the constant vector (rows sum to zero).
    """
    if M < 5:
        raise ValueError(f"the pentadiagonal stencil needs M >= 5, got {M}")
    if boundary not in BOUNDARIES:
        raise ValueError(f"boundary must be one of {BOUNDARIES}, got {boundary!r}")
    if boundary == "periodic":
        A = np.zeros((M, M))
        idx = np.arange(M)
        A[idx, idx] = 2 * alpha + 6 * beta
        A[idx, (idx + 1) % M] = -alpha - 4 * beta
        A[idx, (idx - 1) % M] = -alpha - 4 * beta
        A[idx, (idx + 2) % M] += beta
        A[idx, (idx - 2) % M] += beta
    else:
        d1 = np.zeros((M - 1, M))
        d1[np.arange(M - 1), np.arange(M - 1)] = -1.0
        d1[np.arange(M - 1), np.arange(1, M)] = 1.0
        d2 = np.zeros((M - 2, M))
        d2[np.arange(M - 2), np.arange(M - 2)] = 1.0
        d2[np.arange(M - 2), np.arange(1, M - 1)] = -2.0
        d2[np.arange(M - 2), np.arange(2, M)] = 1.0
        A = alpha * (d1.T @ d1) + beta * (d2.T @ d2)
    return StiffnessMatrix(alpha, beta, boundary, A)


def decay_scale(t: int, gamma: float) -> float:
    """Stiffness multiplier exp(-t * gamma) in effect for the step out of
    iteration t."""
    return math.exp(-t * gamma)


def snake_step(state: SnakeState, family, A: StiffnessMatrix, eta: float) -> SnakeState:
    """One implicit snake update of every member; all K columns reuse one
    factorization of (eta A + I)."""
    theta = np.asarray(state.theta, dtype=float)
    grads = family.gradient_all(theta)
    new_theta = A.solve_implicit(eta, theta - eta * grads)
    return SnakeState(new_theta, state.t + 1)


@dataclass
class RunResult:
    """Outcome of snake_run or gd_run."""

    theta: np.ndarray
    iterations: int
    converged: bool
    values: np.ndarray
    grad_inf: np.ndarray
    labels: np.ndarray
    residual_inf: np.ndarray | None
    trajectory: list
    wall_time: float
    config: SnakeConfig | None = None


def _random_init(family, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    low, high = family.init_range
    return rng.uniform(low, high, size=(family.M, family.K))


def _check_finite(arr: np.ndarray, kind: str, t: int):
    if not np.all(np.isfinite(arr)):
        bad = int(np.argwhere(~np.isfinite(arr))[0][0])
        raise ArithmeticError(f"non-finite {kind} for member {bad} at iteration {t}")


def _validate_snake_family(family):
    if family.M < 5:
        raise ValueError(f"snake needs at least 5 members, got {family.M}")
    labels = family.labels()
    steps = np.diff(labels)
    if steps.size and not np.allclose(steps, steps[0], rtol=0, atol=1e-9 * max(1.0, abs(steps[0]))):
        raise ValueError("snake requires a uniformly spaced label grid")


def snake_run(family, config: SnakeConfig, init: np.ndarray | None = None) -> RunResult:
    """Iterate snake steps until every member's gradient infinity norm
    drops below grad_tol or max_iters is reached.

    Records a Theta snapshot every snapshot_stride iterations (plus the
    initial and final states).  The reported residual_inf gives, per
    parameter column i, the infinity norm of A r_i + g_i under the final
    effective stiffness: the equilibrium bias that distinguishes the
    snake's fixed point from per-member stationarity.
    """
    _validate_snake_family(family)
    start = time.perf_counter()
    if init is None:
        theta = _random_init(family, config.seed)
    else:
        theta = np.array(init, dtype=float)
        if theta.shape != (family.M, family.K):
            raise ValueError(f"init has shape {theta.shape}, expected {(family.M, family.K)}")
    state = SnakeState(theta)
    A = build_A(config.alpha, config.beta, family.M, config.boundary)

    trajectory = []
    converged = False
    grads = family.gradient_all(state.theta)
    _check_finite(grads, "gradient", 0)
    while True:
        if config.snapshot_stride > 0 and state.t % config.snapshot_stride == 0:
            values = family.value_all(state.theta)
            _check_finite(values, "value", state.t)
            trajectory.append((state.t, state.theta.copy(), values))
        if float(np.max(np.abs(grads))) < config.grad_tol:
            converged = True
            break
        if state.t >= config.max_iters:
            break
        scale = decay_scale(state.t, config.gamma)
        new_theta = A.solve_implicit(config.eta, state.theta - config.eta * grads, scale)
        state = SnakeState(new_theta, state.t + 1)
        grads = family.gradient_all(state.theta)
        _check_finite(grads, "gradient", state.t)

    values = family.value_all(state.theta)
    _check_finite(values, "value", state.t)
    if not trajectory or trajectory[-1][0] != state.t:
        trajectory.append((state.t, state.theta.copy(), values))
    final_scale = decay_scale(state.t, config.gamma)
    residual = (final_scale * A.entries) @ state.theta + grads
    return RunResult(
        theta=state.theta,
        iterations=state.t,
        converged=converged,
        values=values,
        grad_inf=np.max(np.abs(grads), axis=1),
        labels=family.labels(),
        residual_inf=np.max(np.abs(residual), axis=0),
        trajectory=trajectory,
        wall_time=time.perf_counter() - start,
        config=config,
    )


def gd_step(theta: np.ndarray, family, eta: float) -> np.ndarray:
    """Plain gradient descent on every member independently."""
    theta = np.asarray(theta, dtype=float)
    return theta - eta * family.gradient_all(theta)


def gd_run(
    family,
    eta: float,
    max_iters: int = 2000,
    grad_tol: float = 1e-6,
    init: np.ndarray | None = None,
    seed: int = 0,
    snapshot_stride: int = 1,
) -> RunResult:
    """Independent gradient descent over all members, same reporting
    format as snake_run.  Members never interact."""
    if eta <= 0:
        raise ValueError(f"eta must be positive, got {eta}")
    start = time.perf_counter()
    if init is None:
        theta = _random_init(family, seed)
    else:
        theta = np.array(init, dtype=float)
        if theta.shape != (family.M, family.K):
            raise ValueError(f"init has shape {theta.shape}, expected {(family.M, family.K)}")

    trajectory = []
    converged = False
    t = 0
    grads = family.gradient_all(theta)
    _check_finite(grads, "gradient", 0)
    while True:
        if snapshot_stride > 0 and t % snapshot_stride == 0:
            values = family.value_all(theta)
            _check_finite(values, "value", t)
            trajectory.append((t, theta.copy(), values))
        if float(np.max(np.abs(grads))) < grad_tol:
            converged = True
            break
        if t >= max_iters:
            break
        theta = theta - eta * grads
        t += 1
        grads = family.gradient_all(theta)
        _check_finite(grads, "gradient", t)

    values = family.value_all(theta)
    _check_finite(values, "value", t)
    if not trajectory or trajectory[-1][0] != t:
        trajectory.append((t, theta.copy(), values))
    return RunResult(
        theta=theta,
        iterations=t,
        converged=converged,
        values=values,
        grad_inf=np.max(np.abs(grads), axis=1),
        labels=family.labels(),
        residual_inf=None,
        trajectory=trajectory,
        wall_time=time.perf_counter() - start,
        config=None,
    )


def internal_energy(state, alpha: float, beta: float, boundary: str = "periodic") -> float:
    """Discrete stretch plus bend energy of the snake:
    sum over columns of alpha |D1 r|^2 + beta |D2 r|^2, with differences
    wrapping cyclically under the periodic boundary and one-sided at the
    ends otherwise."""
    theta = np.asarray(state.theta if isinstance(state, SnakeState) else state, dtype=float)
    if theta.ndim == 1:
        theta = theta[:, None]
    if boundary not in BOUNDARIES:
        raise ValueError(f"boundary must be one of {BOUNDARIES}, got {boundary!r}")
    if boundary == "periodic":
        d1 = np.roll(theta, -1, axis=0) - theta
        d2 = np.roll(theta, -1, axis=0) - 2 * theta + np.roll(theta, 1, axis=0)
    else:
        d1 = theta[1:] - theta[:-1]
        d2 = theta[2:] - 2 * theta[1:-1] + theta[:-2]
    return float(alpha * np.sum(d1 * d1) + beta * np.sum(d2 * d2))
