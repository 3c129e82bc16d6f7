import numpy as np
import pytest

from snakevqe import oracle
from snakevqe.pauli import Hamiltonian, h2_point
from snakevqe.statevector import (
    apply_circuit,
    apply_gate,
    apply_pauli,
    apply_pauli_exponential,
    basis_state,
    energy,
    expectation,
    pauli_exponential_circuit,
)

RT2 = 1.0 / np.sqrt(2.0)


def test_basis_state_encoding():
    assert basis_state("01").amplitudes[1] == 1.0
    assert basis_state("111").amplitudes[7] == 1.0
    assert basis_state("0011").amplitudes[3] == 1.0


def test_basis_state_rejects_bad_bits():
    with pytest.raises(ValueError):
        basis_state("")
    with pytest.raises(ValueError):
        basis_state("021")


def test_pauli_exponential_at_zero_is_identity():
    s = basis_state("01")
    out = apply_pauli_exponential(s, "XY", 0.0)
    assert np.array_equal(out.amplitudes, s.amplitudes)


def test_pauli_exponential_half_pi():
    out = apply_pauli_exponential(basis_state("01"), "XY", np.pi / 2)
    expected = np.array([0, 0, -1, 0], dtype=complex)
    np.testing.assert_allclose(out.amplitudes, expected, atol=1e-15)


def test_pauli_exponential_quarter_pi():
    out = apply_pauli_exponential(basis_state("01"), "XY", np.pi / 4)
    expected = np.array([0, RT2, -RT2, 0], dtype=complex)
    np.testing.assert_allclose(out.amplitudes, expected, atol=1e-15)


def test_pauli_exponential_rejects_length_mismatch():
    with pytest.raises(ValueError):
        apply_pauli_exponential(basis_state("01"), "XYZ", 0.1)


def test_expectation_on_basis_eigenstates():
    s = basis_state("01")
    assert expectation(s, "ZI") == 1.0
    assert expectation(s, "IZ") == -1.0


def test_expectation_entangled_state():
    s = apply_pauli_exponential(basis_state("01"), "XY", np.pi / 8)
    assert abs(expectation(s, "XX") - (-np.sin(np.pi / 4))) < 1e-12


def test_expectation_identity_word_is_one():
    rng = np.random.default_rng(4)
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    amps /= np.linalg.norm(amps)
    from snakevqe.statevector import StateVector

    s = StateVector(3, amps)
    assert abs(expectation(s, "III") - 1.0) < 1e-12


def test_energy_single_term_and_zero_hamiltonian():
    s = basis_state("01")
    assert energy(s, Hamiltonian.from_terms(2, [(1.0, "ZI")])) == 1.0
    assert energy(s, Hamiltonian(2, ())) == 0.0


def test_energy_synthetic_point_at_reference():
    h = h2_point(0.0, 0.5, -0.5, 0.2, 0.3, 0.3)
    assert abs(energy(basis_state("01"), h) - 0.8) < 1e-12


def test_energy_matches_dense_oracle():
    rng = np.random.default_rng(7)
    words = ["".join(rng.choice(list("IXYZ"), 3)) for _ in range(6)]
    h = Hamiltonian.from_terms(3, [(rng.uniform(-1, 1), w) for w in words])
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    amps /= np.linalg.norm(amps)
    from snakevqe.statevector import StateVector

    s = StateVector(3, amps)
    dense = oracle.dense_matrix(h).entries
    assert abs(energy(s, h) - np.real(np.vdot(amps, dense @ amps))) < 1e-10


def test_hadamard_and_cnot():
    plus = apply_gate(basis_state("0"), ("H", 0))
    np.testing.assert_allclose(plus.amplitudes, [RT2, RT2], atol=1e-15)
    flipped = apply_gate(basis_state("10"), ("CNOT", 0, 1))
    assert flipped.amplitudes[3] == 1.0


def test_rotation_conventions():
    s = basis_state("0")
    rz = apply_gate(s, ("RZ", 0, 0.7))
    assert abs(rz.amplitudes[0] - np.exp(-0.35j)) < 1e-15
    rx = apply_gate(s, ("RX", 0, np.pi))
    np.testing.assert_allclose(rx.amplitudes, [0, -1j], atol=1e-15)


def test_gate_validation():
    with pytest.raises(IndexError):
        apply_gate(basis_state("00"), ("H", 2))
    with pytest.raises(ValueError):
        apply_gate(basis_state("00"), ("CNOT", 1, 1))
    with pytest.raises(ValueError):
        apply_gate(basis_state("00"), ("SWAP", 0, 1))


@pytest.mark.parametrize("word,bits", [
    ("XY", "01"),
    ("XZX", "010"),
    ("XXXY", "0011"),
    ("XIYI", "0011"),
    ("IXIY", "0011"),
])
def test_decomposition_matches_direct_exponential(word, bits):
    rng = np.random.default_rng(11)
    for _ in range(5):
        theta = rng.uniform(-np.pi, np.pi)
        start = basis_state(bits)
        direct = apply_pauli_exponential(start, word, theta)
        gates = pauli_exponential_circuit(word, theta)
        decomposed = apply_circuit(start, gates)
        assert decomposed.fidelity(direct) >= 1 - 1e-10


def test_decomposition_rejects_identity():
    with pytest.raises(ValueError):
        pauli_exponential_circuit("II", 0.3)


def test_unitarity_of_random_operation_sequences():
    rng = np.random.default_rng(23)
    s = basis_state("0100")
    for _ in range(40):
        kind = rng.integers(3)
        if kind == 0:
            word = "".join(rng.choice(list("IXYZ"), 4))
            if set(word) != {"I"}:
                s = apply_pauli_exponential(s, word, rng.uniform(-3, 3))
        elif kind == 1:
            s = apply_gate(s, (rng.choice(["H", "RX", "RZ"]), int(rng.integers(4)), rng.uniform(-3, 3))[:3])
        else:
            q = rng.permutation(4)[:2]
            s = apply_gate(s, ("CNOT", int(q[0]), int(q[1])))
        assert abs(s.norm - 1.0) < 1e-12


def test_exponential_angle_additivity():
    s = basis_state("0011")
    once = apply_pauli_exponential(s, "XXXY", 0.9)
    twice = apply_pauli_exponential(apply_pauli_exponential(s, "XXXY", 0.4), "XXXY", 0.5)
    np.testing.assert_allclose(once.amplitudes, twice.amplitudes, atol=1e-12)


def test_pauli_application_is_involution():
    rng = np.random.default_rng(3)
    amps = rng.normal(size=16) + 1j * rng.normal(size=16)
    amps /= np.linalg.norm(amps)
    from snakevqe.statevector import StateVector

    s = StateVector(4, amps)
    for word in ("XYZI", "YYYY", "ZIZX"):
        back = apply_pauli(apply_pauli(s, word), word)
        np.testing.assert_allclose(back.amplitudes, amps, atol=1e-13)
