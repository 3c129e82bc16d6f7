"""Pauli-string Hamiltonians and parameterized families of them.

A Hamiltonian is a real-weighted sum of Pauli words (tensor products of
I, X, Y, Z with one letter per qubit; the leftmost letter acts on qubit 0).
A family is an ordered sequence of (lambda, Hamiltonian) pairs sharing one
qubit count, typically a potential-energy scan over bond lengths.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

PAULI_CHARS = "IXYZ"


class PauliString(str):
    """A Pauli word: one character in {I, X, Y, Z} per qubit.

    Position k acts on qubit k, with position 0 leftmost.  As an operator
    every word is Hermitian, unitary, and squares to the identity.
    Subclasses ``str`` so words can be used directly as dict keys.
    """

    __slots__ = ()

    def __new__(cls, word) -> "PauliString":
        w = str(word)
        if len(w) < 1:
            raise ValueError("Pauli word must act on at least one qubit")
        bad = sorted(set(w) - set(PAULI_CHARS))
        if bad:
            raise ValueError(f"illegal Pauli character(s) {bad} in {w!r}")
        return super().__new__(cls, w)

    @property
    def word(self) -> str:
        return str(self)

    @property
    def n_qubits(self) -> int:
        return len(self)

    def is_identity(self) -> bool:
        return set(self) == {"I"}


def parse_pauli_string(text: str, n_qubits: int) -> PauliString:
    """Validate ``text`` as a Pauli word on exactly ``n_qubits`` qubits."""
    if len(text) != n_qubits:
        raise ValueError(
            f"Pauli word {text!r} has length {len(text)}, expected {n_qubits}"
        )
    return PauliString(text)


def _as_real_coeff(value) -> float:
    if isinstance(value, bool) or isinstance(value, complex) and not isinstance(value, float):
        raise TypeError(f"coefficient must be a real number, got {value!r}")
    c = float(value)
    if not math.isfinite(c):
        raise ValueError(f"coefficient must be finite, got {value!r}")
    return c


@dataclass(frozen=True)
class Hamiltonian:
    """Real-weighted sum of Pauli words on a fixed number of qubits."""

    n_qubits: int
    terms: tuple[tuple[float, PauliString], ...]

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        checked = []
        for coeff, word in self.terms:
            word = parse_pauli_string(str(word), self.n_qubits)
            checked.append((_as_real_coeff(coeff), word))
        object.__setattr__(self, "terms", tuple(checked))

    @classmethod
    def from_terms(cls, n_qubits: int, terms) -> "Hamiltonian":
        """Build a canonical Hamiltonian: duplicate words merged by exact
        summation, zero coefficients dropped, terms sorted by word."""
        grouped: dict[str, list[float]] = {}
        for coeff, word in terms:
            word = parse_pauli_string(str(word), n_qubits)
            grouped.setdefault(word, []).append(_as_real_coeff(coeff))
        merged = []
        for word in sorted(grouped):
            c = math.fsum(grouped[word])
            if c != 0.0:
                merged.append((c, PauliString(word)))
        return cls(n_qubits, tuple(merged))

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        body = " + ".join(f"{c:+g}*{w}" for c, w in self.terms[:6])
        if self.n_terms > 6:
            body += " + ..."
        return f"Hamiltonian({self.n_qubits}q: {body})"


@dataclass(frozen=True)
class HamiltonianFamily:
    """Ordered (lambda, Hamiltonian) pairs sharing one qubit count.

    Lambda values are strictly increasing; this is the track the snake
    optimizer crawls along.
    """

    parameter_name: str
    points: tuple[tuple[float, Hamiltonian], ...]

    def __post_init__(self):
        if not self.points:
            raise ValueError("family must contain at least one point")
        lams = [float(lam) for lam, _ in self.points]
        if any(not math.isfinite(l) for l in lams):
            raise ValueError("lambda values must be finite")
        for a, b in zip(lams, lams[1:]):
            if not a < b:
                raise ValueError(f"lambda values must be strictly increasing, got {a} then {b}")
        nq = {h.n_qubits for _, h in self.points}
        if len(nq) != 1:
            raise ValueError(f"all Hamiltonians must share one qubit count, got {sorted(nq)}")
        object.__setattr__(
            self, "points", tuple((float(lam), h) for lam, h in self.points)
        )

    @property
    def n_qubits(self) -> int:
        return self.points[0][1].n_qubits

    @property
    def M(self) -> int:
        return len(self.points)

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([lam for lam, _ in self.points])

    @property
    def hamiltonians(self) -> tuple[Hamiltonian, ...]:
        return tuple(h for _, h in self.points)


# ---------------------------------------------------------------------------
# JSON family files


def _reject_constant(name):
    raise ValueError(f"non-finite JSON number {name!r} not allowed in family files")


def load_family(path) -> HamiltonianFamily:
    """Load, validate, sort and merge a Hamiltonian-family JSON file.

    Points may appear in any order in the file; duplicate Pauli words at
    one point are merged by summing coefficients and exact zeros are
    dropped.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: top level must be an object")
    for key in ("n_qubits", "parameter_name", "points"):
        if key not in raw:
            raise ValueError(f"{path}: missing required key {key!r}")
    n_qubits = raw["n_qubits"]
    if not isinstance(n_qubits, int) or n_qubits < 1:
        raise ValueError(f"{path}: n_qubits must be a positive integer")
    if not isinstance(raw["points"], list) or not raw["points"]:
        raise ValueError(f"{path}: points must be a non-empty list")

    points = []
    for i, entry in enumerate(raw["points"]):
        if not isinstance(entry, dict) or "lambda" not in entry or "terms" not in entry:
            raise ValueError(f"{path}: point {i} must have 'lambda' and 'terms'")
        lam = entry["lambda"]
        if isinstance(lam, bool) or not isinstance(lam, (int, float)):
            raise ValueError(f"{path}: point {i} lambda must be a number")
        terms = []
        for j, term in enumerate(entry["terms"]):
            if not isinstance(term, dict) or "coeff" not in term or "pauli" not in term:
                raise ValueError(f"{path}: point {i} term {j} must have 'coeff' and 'pauli'")
            terms.append((term["coeff"], term["pauli"]))
        points.append((float(lam), Hamiltonian.from_terms(n_qubits, terms)))

    points.sort(key=lambda p: p[0])
    return HamiltonianFamily(str(raw["parameter_name"]), tuple(points))


def save_family(family: HamiltonianFamily, path) -> None:
    """Write a family back to the JSON file format read by load_family."""
    doc = {
        "n_qubits": family.n_qubits,
        "parameter_name": family.parameter_name,
        "points": [
            {
                "lambda": lam,
                "terms": [{"coeff": c, "pauli": str(w)} for c, w in h.terms],
            }
            for lam, h in family.points
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# Synthetic two-qubit family

H2_WORDS = ("II", "ZI", "IZ", "ZZ", "XX", "YY")


def h2_point(c0: float, c1: float, c2: float, c3: float, c4: float, c5: float) -> Hamiltonian:
    """Two-qubit Hamiltonian with the molecular-hydrogen term structure
    c0*II + c1*ZI + c2*IZ + c3*ZZ + c4*XX + c5*YY."""
    return Hamiltonian.from_terms(2, zip((c0, c1, c2, c3, c4, c5), H2_WORDS))


def _synthetic_h2_coeffs(lam):
    """Smooth analytic coefficient functions for the synthetic family.

    The XX/YY-vs-(ZI-IZ) rotation angle phi and the coupling radius are
    parameterized directly so the single-excitation block stays well
    conditioned; the identity coefficient is chosen so the exact ground
    energy is a Morse curve with its minimum at lambda = 1.4.
    """
    lam = np.asarray(lam, dtype=float)
    phi = 0.30 + 1.05 * (1.0 - np.exp(-lam / 1.1))
    radius = 0.27 + 0.28 * np.exp(-lam / 1.2)
    split = radius * np.cos(phi)
    hop = 0.5 * radius * np.sin(phi)
    mean = 0.08 * np.exp(-lam) - 0.02
    c1 = mean + 0.5 * split
    c2 = mean - 0.5 * split
    c3 = 0.12 + 0.06 * np.exp(-0.8 * lam)
    morse = 0.45 * (1.0 - np.exp(-1.1 * (lam - 1.4))) ** 2 - 1.12
    c0 = morse + c3 + radius
    return c0, c1, c2, c3, hop, hop


def synth_h2_family(M: int, lambda_min: float, lambda_max: float) -> HamiltonianFamily:
    """Deterministic synthetic two-qubit family with the molecular-hydrogen
    term structure and smooth coefficients.

    Every point is verified against dense diagonalization to have its
    ground state inside the span{|01>, |10>} block, so the single-parameter
    entangler ansatz can represent the exact ground state at every lambda.
    """
    if M < 5:
        raise ValueError(f"M must be at least 5, got {M}")
    if not lambda_min < lambda_max:
        raise ValueError(f"need lambda_min < lambda_max, got {lambda_min} >= {lambda_max}")
    lams = np.linspace(lambda_min, lambda_max, M)
    coeffs = np.column_stack(_synthetic_h2_coeffs(lams))
    points = tuple((float(lam), h2_point(*row)) for lam, row in zip(lams, coeffs))
    family = HamiltonianFamily("bond_length_au", points)

    from . import oracle  # deferred: oracle has no import-time dependency on this module

    for lam, ham in family.points:
        mat = oracle.dense_matrix(ham).entries
        if abs(mat[0, 1]) + abs(mat[0, 2]) + abs(mat[3, 1]) + abs(mat[3, 2]) > 1e-12:
            raise AssertionError(f"synthetic point at lambda={lam} is not block diagonal")
        inner = np.linalg.eigvalsh(mat[1:3, 1:3]).min()
        outer = np.linalg.eigvalsh(mat[np.ix_([0, 3], [0, 3])]).min()
        if not inner < outer:
            raise AssertionError(
                f"synthetic point at lambda={lam} has ground state outside the "
                f"single-excitation block ({inner} vs {outer})"
            )
    return family
