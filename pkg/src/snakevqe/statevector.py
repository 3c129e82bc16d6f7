"""Dense statevector simulation for up to ~10 qubits.

Basis convention: index i encodes the bitstring b0 b1 ... b_{n-1} with
qubit 0 as the most significant bit, so |01> on two qubits is index 1.
All operations are exact (no sampling) and norm preserving; they return
new states rather than mutating their input.

The internal kernels operate on batches of amplitude vectors with shape
(..., 2**n) so that families of parameter points can be evaluated in a
single vectorized call.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .pauli import Hamiltonian, PauliString, parse_pauli_string


@dataclass(frozen=True)
class StateVector:
    """Normalized complex amplitudes over the computational basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n_qubits,):
            raise ValueError(
                f"amplitude vector has shape {amps.shape}, expected (2**{self.n_qubits},)"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def overlap(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def fidelity(self, other: "StateVector") -> float:
        """|<a|b>|^2, insensitive to global phase."""
        return abs(self.overlap(other)) ** 2


def basis_state(bits: str) -> StateVector:
    """Computational basis state for a bitstring like "01"."""
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"bits must be a non-empty string over 0/1, got {bits!r}")
    n = len(bits)
    amps = np.zeros(2**n, dtype=complex)
    amps[int(bits, 2)] = 1.0
    return StateVector(n, amps)


# ---------------------------------------------------------------------------
# Pauli-word kernels


@lru_cache(maxsize=None)
def _word_action(word: str):
    """Permutation and phase realizing P|i> = phase[i] |perm[i]>.

    X and Y flip the qubit's bit; Y and Z pick up a sign from the input
    bit, and each Y contributes one factor of i.
    """
    n = len(word)
    dim = 1 << n
    idx = np.arange(dim)
    x_mask = 0
    yz_mask = 0
    n_y = 0
    for k, ch in enumerate(word):
        bit = 1 << (n - 1 - k)
        if ch in "XY":
            x_mask |= bit
        if ch in "YZ":
            yz_mask |= bit
        if ch == "Y":
            n_y += 1
    signs = 1 - 2 * (np.bitwise_count(idx & yz_mask).astype(np.int64) & 1)
    phase = (1j**n_y) * signs
    perm = idx ^ x_mask
    return perm, phase.astype(complex)


def _apply_word(amps: np.ndarray, word: str) -> np.ndarray:
    """Apply a Pauli word to batched amplitudes of shape (..., 2**n)."""
    perm, phase = _word_action(word)
    return (phase * amps)[..., perm]


def _apply_word_exp(amps: np.ndarray, word: str, theta) -> np.ndarray:
    """exp(-i*theta*P) on batched amplitudes; theta broadcasts over the batch."""
    theta = np.asarray(theta, dtype=float)
    c = np.cos(theta)[..., None]
    s = np.sin(theta)[..., None]
    return c * amps - 1j * s * _apply_word(amps, word)


def _expect_word(amps: np.ndarray, word: str) -> np.ndarray:
    """<psi|P|psi> for batched amplitudes; returns real array of batch shape."""
    val = np.sum(np.conj(amps) * _apply_word(amps, word), axis=-1)
    return np.real(val)


# ---------------------------------------------------------------------------
# Public single-state operations


def _check_word(state: StateVector, P) -> PauliString:
    return parse_pauli_string(str(P), state.n_qubits)


def apply_pauli_exponential(state: StateVector, P, theta: float) -> StateVector:
    """Return exp(-i*theta*P)|state> = cos(theta)|state> - i sin(theta) P|state>."""
    word = _check_word(state, P)
    return StateVector(state.n_qubits, _apply_word_exp(state.amplitudes, word, float(theta)))


def apply_pauli(state: StateVector, P) -> StateVector:
    word = _check_word(state, P)
    return StateVector(state.n_qubits, _apply_word(state.amplitudes, word))


def expectation(state: StateVector, P) -> float:
    """<psi|P|psi>, checked to be real and clipped into [-1, 1]."""
    word = _check_word(state, P)
    val = complex(np.vdot(state.amplitudes, _apply_word(state.amplitudes, word)))
    if abs(val.imag) > 1e-12:
        raise ArithmeticError(f"expectation of {word} has imaginary part {val.imag}")
    if abs(val.real) > 1.0 + 1e-9:
        raise ArithmeticError(f"expectation of {word} is {val.real}, outside [-1, 1]")
    return float(min(1.0, max(-1.0, val.real)))


def energy(state: StateVector, H: Hamiltonian) -> float:
    """Sum of coeff * <psi|P|psi> over the Hamiltonian terms."""
    if H.n_qubits != state.n_qubits:
        raise ValueError(f"qubit mismatch: state has {state.n_qubits}, H has {H.n_qubits}")
    return float(sum(c * expectation(state, w) for c, w in H.terms))


# ---------------------------------------------------------------------------
# Elementary gates

_H_MAT = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)


def _rx(phi: float) -> np.ndarray:
    c, s = np.cos(phi / 2), np.sin(phi / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


def _rz(phi: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * phi), 0], [0, np.exp(0.5j * phi)]])


def _apply_1q(amps: np.ndarray, u: np.ndarray, qubit: int, n: int) -> np.ndarray:
    bit = 1 << (n - 1 - qubit)
    idx = np.arange(1 << n)
    low = idx[(idx & bit) == 0]
    high = low | bit
    out = np.empty_like(amps)
    a0 = amps[..., low]
    a1 = amps[..., high]
    out[..., low] = u[0, 0] * a0 + u[0, 1] * a1
    out[..., high] = u[1, 0] * a0 + u[1, 1] * a1
    return out


def _apply_cnot(amps: np.ndarray, control: int, target: int, n: int) -> np.ndarray:
    cbit = 1 << (n - 1 - control)
    tbit = 1 << (n - 1 - target)
    idx = np.arange(1 << n)
    perm = np.where((idx & cbit) != 0, idx ^ tbit, idx)
    return amps[..., perm]


def apply_gate(state: StateVector, gate: tuple) -> StateVector:
    """Apply one elementary gate, given as a tuple:

    ("H", q) | ("RX", q, phi) | ("RZ", q, phi) | ("CNOT", control, target)

    Rotation convention: RZ(phi) = exp(-i*phi*Z/2), RX(phi) = exp(-i*phi*X/2).
    """
    n = state.n_qubits
    kind = gate[0].upper()
    if kind in ("H", "RX", "RZ"):
        q = gate[1]
        if not 0 <= q < n:
            raise IndexError(f"qubit {q} out of range for {n} qubits")
        if kind == "H":
            u = _H_MAT
        elif kind == "RX":
            u = _rx(float(gate[2]))
        else:
            u = _rz(float(gate[2]))
        return StateVector(n, _apply_1q(state.amplitudes, u, q, n))
    if kind == "CNOT":
        control, target = gate[1], gate[2]
        if not (0 <= control < n and 0 <= target < n):
            raise IndexError(f"qubit pair ({control},{target}) out of range for {n} qubits")
        if control == target:
            raise ValueError("CNOT control and target must differ")
        return StateVector(n, _apply_cnot(state.amplitudes, control, target, n))
    raise ValueError(f"unknown gate {gate!r}")


def pauli_exponential_circuit(P, theta: float) -> list[tuple]:
    """Elementary-gate decomposition of exp(-i*theta*P).

    Each X letter is conjugated into Z by a Hadamard, each Y letter by
    RX(pi/2); a CNOT ladder folds the joint parity onto the last involved
    qubit, where RZ(2*theta) applies the rotation.
    """
    word = PauliString(P)
    involved = [k for k, ch in enumerate(word) if ch != "I"]
    if not involved:
        raise ValueError("cannot decompose the identity word")
    pre: list[tuple] = []
    post: list[tuple] = []
    for q in involved:
        if word[q] == "X":
            pre.append(("H", q))
            post.append(("H", q))
        elif word[q] == "Y":
            pre.append(("RX", q, np.pi / 2))
            post.append(("RX", q, -np.pi / 2))
    ladder = [("CNOT", a, b) for a, b in zip(involved, involved[1:])]
    gates = pre + ladder + [("RZ", involved[-1], 2.0 * float(theta))]
    gates += list(reversed(ladder)) + list(reversed(post))
    return gates


def apply_circuit(state: StateVector, gates) -> StateVector:
    for gate in gates:
        state = apply_gate(state, gate)
    return state
