"""Brute-force ground truth for small systems.

Dense matrices, exact ground energies via full Hermitian
eigendecomposition, and uniform grid scans of ansatz landscapes.  Nothing
here shares code with the simulator path, so the two sides can check each
other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

MAX_QUBITS = 5


@dataclass(frozen=True)
class DenseHermitian:
    dim: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.shape != (self.dim, self.dim):
            raise ValueError(f"matrix shape {entries.shape} does not match dim {self.dim}")
        if not np.allclose(entries, entries.conj().T, atol=1e-12):
            raise ValueError("matrix is not Hermitian within 1e-12")
        object.__setattr__(self, "entries", entries)


def word_matrix(word: str) -> np.ndarray:
    """Kronecker product of single-qubit Pauli matrices, qubit 0 first."""
    mat = _PAULI_MATS[word[0]]
    for ch in word[1:]:
        mat = np.kron(mat, _PAULI_MATS[ch])
    return mat


def dense_matrix(H) -> DenseHermitian:
    """Materialize sum_i c_i P_i as a dense matrix (n_qubits <= 5)."""
    if H.n_qubits > MAX_QUBITS:
        raise ValueError(f"dense oracle limited to {MAX_QUBITS} qubits, got {H.n_qubits}")
    dim = 2**H.n_qubits
    mat = np.zeros((dim, dim), dtype=complex)
    for coeff, word in H.terms:
        mat += coeff * word_matrix(word)
    return DenseHermitian(dim, mat)


def ground_energy(H) -> float:
    """Minimum eigenvalue of the dense matrix."""
    return float(np.linalg.eigvalsh(dense_matrix(H).entries)[0])


def _scan_energies(ansatz, H, resolution: int):
    from .ansatz import _batched_energy  # deferred to keep module layering acyclic

    if ansatz.n_params > 3:
        raise ValueError(f"grid scan limited to 3 parameters, got {ansatz.n_params}")
    if resolution < 16:
        raise ValueError(f"resolution must be at least 16, got {resolution}")
    axis = -np.pi + 2 * np.pi * np.arange(resolution) / resolution
    grids = np.meshgrid(*([axis] * ansatz.n_params), indexing="ij")
    thetas = np.stack([g.reshape(-1) for g in grids], axis=-1)
    energies = np.asarray(_batched_energy(ansatz, H, thetas), dtype=float)
    return axis, thetas, energies.reshape((resolution,) * ansatz.n_params)


def grid_scan_min(ansatz, H, resolution: int):
    """Brute-force minimum of the ansatz energy over [-pi, pi)^K.

    Returns (theta_star, e_star) for the best grid point; accuracy is set
    by the grid spacing and local curvature, never by the optimizer under
    test.
    """
    axis, thetas, energies = _scan_energies(ansatz, H, resolution)
    flat = energies.reshape(-1)
    best = int(np.argmin(flat))
    return thetas[best].copy(), float(flat[best])


def grid_local_minima(ansatz, H, resolution: int):
    """Grid points strictly below all their axis-aligned cyclic neighbors.

    Returns a list of (theta, energy) sorted by energy; used to count and
    locate distinct basins in nonconvex landscapes.
    """
    axis, thetas, energies = _scan_energies(ansatz, H, resolution)
    is_min = np.ones(energies.shape, dtype=bool)
    for ax in range(energies.ndim):
        is_min &= energies < np.roll(energies, 1, axis=ax)
        is_min &= energies < np.roll(energies, -1, axis=ax)
    found = np.argwhere(is_min)
    out = []
    for multi_idx in found:
        theta = np.array([axis[i] for i in multi_idx])
        out.append((theta, float(energies[tuple(multi_idx)])))
    out.sort(key=lambda pair: pair[1])
    return out
