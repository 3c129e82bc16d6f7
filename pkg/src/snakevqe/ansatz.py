"""Unitary-coupled-cluster style ansatzes as data.

An ansatz is a reference bitstring plus an ordered list of parameterized
generators; gate g applies exp(-i * theta[g.param_index] * g.scale * P).
Energies are evaluated on the statevector simulator and gradients come
from the parameter-shift rule (finite differences are kept as an
independent cross-check).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .pauli import Hamiltonian, PauliString, parse_pauli_string
from .statevector import StateVector, _apply_word_exp, _expect_word


@dataclass(frozen=True)
class AnsatzGate:
    generator: PauliString
    param_index: int
    scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "generator", PauliString(self.generator))
        if self.generator.is_identity():
            raise ValueError("ansatz generator must not be the identity word")
        if self.param_index < 0:
            raise ValueError("param_index must be non-negative")
        if self.scale == 0.0:
            raise ValueError("gate scale must be nonzero")


@dataclass(frozen=True)
class Ansatz:
    n_qubits: int
    reference: str
    gates: tuple[AnsatzGate, ...]

    def __post_init__(self):
        if len(self.reference) != self.n_qubits or set(self.reference) - {"0", "1"}:
            raise ValueError(f"reference {self.reference!r} is not a {self.n_qubits}-qubit bitstring")
        if not self.gates:
            raise ValueError("ansatz needs at least one gate")
        used = set()
        for g in self.gates:
            if g.generator.n_qubits != self.n_qubits:
                raise ValueError(f"generator {g.generator} does not act on {self.n_qubits} qubits")
            used.add(g.param_index)
        if used != set(range(max(used) + 1)):
            raise ValueError(f"parameter indices must cover 0..{max(used)}, got {sorted(used)}")

    @property
    def n_params(self) -> int:
        return 1 + max(g.param_index for g in self.gates)


BUILTIN_NAMES = ("h2_ucc", "lih_ucc", "hehp_ucc", "h2_nonconvex")


def builtin(name: str) -> Ansatz:
    """One of the four built-in ansatzes.

    h2_ucc        2 qubits, 1 parameter: exp(-i t XY) on |01>
    lih_ucc       3 qubits, 2 parameters: exp(-i t2 XIY) exp(-i t1 XYI) on |111>
    hehp_ucc      4 qubits, 3 parameters, single excitations then the
                  double excitation XXXY, on |0011>
    h2_nonconvex  h2_ucc followed by a particle-number breaking layer
                  exp(-i t2 (2.0 X0 + 1.5 X1)); the two commuting factors
                  share the second parameter
    """
    if name == "h2_ucc":
        return Ansatz(2, "01", (AnsatzGate(PauliString("XY"), 0),))
    if name == "lih_ucc":
        return Ansatz(
            3,
            "111",
            (AnsatzGate(PauliString("XYI"), 0), AnsatzGate(PauliString("XIY"), 1)),
        )
    if name == "hehp_ucc":
        return Ansatz(
            4,
            "0011",
            (
                AnsatzGate(PauliString("XIYI"), 0),
                AnsatzGate(PauliString("IXIY"), 1),
                AnsatzGate(PauliString("XXXY"), 2),
            ),
        )
    if name == "h2_nonconvex":
        return Ansatz(
            2,
            "01",
            (
                AnsatzGate(PauliString("XY"), 0),
                AnsatzGate(PauliString("XI"), 1, 2.0),
                AnsatzGate(PauliString("IX"), 1, 1.5),
            ),
        )
    raise ValueError(f"unknown ansatz {name!r}; builtins are {BUILTIN_NAMES}")


def load_ansatz(path) -> Ansatz:
    """Read a custom ansatz from JSON:
    {"n_qubits": 2, "reference": "01",
     "gates": [{"pauli": "XY", "param": 0, "scale": 1.0}, ...]}"""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    try:
        gates = tuple(
            AnsatzGate(
                parse_pauli_string(g["pauli"], int(raw["n_qubits"])),
                int(g["param"]),
                float(g.get("scale", 1.0)),
            )
            for g in raw["gates"]
        )
        return Ansatz(int(raw["n_qubits"]), str(raw["reference"]), gates)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"{path}: malformed ansatz file ({exc})") from exc


# ---------------------------------------------------------------------------
# State preparation and energies (batched kernels under the hood)


def _prepare_amps(ansatz: Ansatz, thetas: np.ndarray, shift_gate: int = -1, shift: float = 0.0):
    """Amplitudes for a batch of parameter vectors, shape (..., 2**n).

    thetas has shape (..., n_params).  If shift_gate >= 0, that gate's
    effective angle is offset by ``shift`` (used by the shift rule).
    """
    thetas = np.asarray(thetas, dtype=float)
    batch_shape = thetas.shape[:-1]
    amps = np.zeros(batch_shape + (2**ansatz.n_qubits,), dtype=complex)
    amps[..., int(ansatz.reference, 2)] = 1.0
    for g_idx, gate in enumerate(ansatz.gates):
        angle = gate.scale * thetas[..., gate.param_index]
        if g_idx == shift_gate:
            angle = angle + shift
        amps = _apply_word_exp(amps, gate.generator, angle)
    return amps


def prepare(ansatz: Ansatz, theta) -> StateVector:
    """|psi(theta)>: gates applied in list order to the reference state."""
    theta = _check_theta(ansatz, theta)
    return StateVector(ansatz.n_qubits, _prepare_amps(ansatz, theta))


def _check_theta(ansatz: Ansatz, theta) -> np.ndarray:
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if theta.shape != (ansatz.n_params,):
        raise ValueError(f"theta has shape {theta.shape}, expected ({ansatz.n_params},)")
    return theta


def _batched_energy(ansatz: Ansatz, H: Hamiltonian, thetas, shift_gate=-1, shift=0.0):
    amps = _prepare_amps(ansatz, thetas, shift_gate, shift)
    total = np.zeros(amps.shape[:-1])
    for coeff, word in H.terms:
        total = total + coeff * _expect_word(amps, word)
    return total


def energy_at(ansatz: Ansatz, H: Hamiltonian, theta) -> float:
    """<psi(theta)|H|psi(theta)>."""
    if H.n_qubits != ansatz.n_qubits:
        raise ValueError(f"qubit mismatch: ansatz has {ansatz.n_qubits}, H has {H.n_qubits}")
    theta = _check_theta(ansatz, theta)
    return float(_batched_energy(ansatz, H, theta))


def gradient(ansatz: Ansatz, H: Hamiltonian, theta) -> np.ndarray:
    """Analytic dE/dtheta via the parameter-shift rule.

    For each gate the derivative with respect to its effective angle is
    E(angle + pi/4) - E(angle - pi/4), exact because every generator is a
    Pauli word; gates sharing a parameter contribute scale-weighted terms
    (the chain rule; exact for the commuting split of a scaled sum).
    """
    if H.n_qubits != ansatz.n_qubits:
        raise ValueError(f"qubit mismatch: ansatz has {ansatz.n_qubits}, H has {H.n_qubits}")
    theta = _check_theta(ansatz, theta)
    grad = np.zeros(ansatz.n_params)
    for g_idx, gate in enumerate(ansatz.gates):
        plus = _batched_energy(ansatz, H, theta, g_idx, np.pi / 4)
        minus = _batched_energy(ansatz, H, theta, g_idx, -np.pi / 4)
        grad[gate.param_index] += gate.scale * float(plus - minus)
    return grad


def gradient_fd(ansatz: Ansatz, H: Hamiltonian, theta, h: float = 1e-5) -> np.ndarray:
    """Central finite differences, the independent cross-check for gradient()."""
    theta = _check_theta(ansatz, theta)
    grad = np.zeros(ansatz.n_params)
    for j in range(ansatz.n_params):
        step = np.zeros_like(theta)
        step[j] = h
        grad[j] = (energy_at(ansatz, H, theta + step) - energy_at(ansatz, H, theta - step)) / (2 * h)
    return grad
