import json

import numpy as np
import pytest

from snakevqe import oracle
from snakevqe.ansatz import (
    Ansatz,
    AnsatzGate,
    builtin,
    energy_at,
    gradient,
    gradient_fd,
    load_ansatz,
    prepare,
)
from snakevqe.pauli import Hamiltonian, PauliString, h2_point

SYNTH = h2_point(0.0, 0.5, -0.5, 0.2, 0.3, 0.3)


def random_hamiltonian(n_qubits, rng, n_terms=8):
    words = []
    while len(words) < n_terms:
        w = "".join(rng.choice(list("IXYZ"), n_qubits))
        if set(w) != {"I"}:
            words.append(w)
    return Hamiltonian.from_terms(n_qubits, [(rng.uniform(-1, 1), w) for w in words])


def test_builtin_h2():
    a = builtin("h2_ucc")
    assert a.n_params == 1 and a.n_qubits == 2 and a.reference == "01"
    assert a.gates[0].generator == "XY"


def test_builtin_lih():
    a = builtin("lih_ucc")
    assert a.n_params == 2 and a.n_qubits == 3 and a.reference == "111"
    assert [g.generator for g in a.gates] == ["XYI", "XIY"]
    assert [g.param_index for g in a.gates] == [0, 1]


def test_builtin_hehp():
    a = builtin("hehp_ucc")
    assert a.n_params == 3 and a.n_qubits == 4 and a.reference == "0011"
    # single excitation on qubits 0,2 acts first, double excitation last
    assert [g.generator for g in a.gates] == ["XIYI", "IXIY", "XXXY"]


def test_builtin_nonconvex_shares_second_parameter():
    a = builtin("h2_nonconvex")
    assert a.n_params == 2
    assert [(g.generator, g.param_index, g.scale) for g in a.gates] == [
        ("XY", 0, 1.0),
        ("XI", 1, 2.0),
        ("IX", 1, 1.5),
    ]


def test_builtin_unknown_name():
    with pytest.raises(ValueError):
        builtin("h3_ucc")


def test_prepare_reference_at_zero():
    s = prepare(builtin("h2_ucc"), [0.0])
    assert s.amplitudes[1] == 1.0


def test_prepare_quarter_pi():
    s = prepare(builtin("h2_ucc"), [np.pi / 4])
    np.testing.assert_allclose(s.amplitudes, [0, 1, -1, 0] / np.sqrt(2), atol=1e-15)


def test_nonconvex_reduces_to_plain_ucc_at_zero_second_parameter():
    rng = np.random.default_rng(5)
    for theta1 in rng.uniform(-np.pi, np.pi, 5):
        a = prepare(builtin("h2_nonconvex"), [theta1, 0.0])
        b = prepare(builtin("h2_ucc"), [theta1])
        np.testing.assert_allclose(a.amplitudes, b.amplitudes, atol=1e-15)


def test_energy_closed_form_values():
    a = builtin("h2_ucc")
    assert abs(energy_at(a, SYNTH, [0.0]) - 0.8) < 1e-12
    assert abs(energy_at(a, SYNTH, [np.pi / 4]) - (-0.8)) < 1e-12
    assert energy_at(a, Hamiltonian(2, ()), [0.3]) == 0.0


def test_energy_closed_form_over_random_coefficients():
    a = builtin("h2_ucc")
    rng = np.random.default_rng(12)
    for _ in range(50):
        c = rng.uniform(-1, 1, 6)
        h = h2_point(*c)
        theta = rng.uniform(-np.pi, np.pi)
        expected = c[0] - c[3] + (c[1] - c[2]) * np.cos(2 * theta) - (c[4] + c[5]) * np.sin(2 * theta)
        assert abs(energy_at(a, h, [theta]) - expected) < 1e-10


def test_gradient_closed_form():
    a = builtin("h2_ucc")
    g = gradient(a, SYNTH, [0.0])
    assert abs(g[0] - (-1.2)) < 1e-12


def test_gradient_vanishes_at_stationary_point():
    a = builtin("h2_ucc")
    theta = 0.5 * np.arctan2(-0.6, 1.0)
    assert abs(gradient(a, SYNTH, [theta])[0]) < 1e-9


@pytest.mark.parametrize("name", ["h2_ucc", "lih_ucc", "hehp_ucc", "h2_nonconvex"])
def test_shift_rule_matches_finite_differences(name):
    a = builtin(name)
    rng = np.random.default_rng(hash(name) % 2**32)
    h = random_hamiltonian(a.n_qubits, rng)
    for _ in range(20):
        theta = rng.uniform(-np.pi, np.pi, a.n_params)
        diff = np.abs(gradient(a, h, theta) - gradient_fd(a, h, theta, h=1e-5))
        assert diff.max() <= 1e-6


@pytest.mark.parametrize("name", ["h2_ucc", "lih_ucc", "hehp_ucc"])
def test_energy_pi_periodic_for_unit_scale_gates(name):
    a = builtin(name)
    rng = np.random.default_rng(2)
    h = random_hamiltonian(a.n_qubits, rng)
    theta = rng.uniform(-np.pi, np.pi, a.n_params)
    base = energy_at(a, h, theta)
    for j in range(a.n_params):
        shifted = theta.copy()
        shifted[j] += np.pi
        assert abs(energy_at(a, h, shifted) - base) < 1e-10


@pytest.mark.parametrize("name", ["h2_ucc", "lih_ucc", "hehp_ucc", "h2_nonconvex"])
def test_variational_bound(name):
    a = builtin(name)
    rng = np.random.default_rng(9)
    for _ in range(5):
        h = random_hamiltonian(a.n_qubits, rng)
        floor = oracle.ground_energy(h)
        for _ in range(10):
            theta = rng.uniform(-np.pi, np.pi, a.n_params)
            assert energy_at(a, h, theta) >= floor - 1e-9


def test_nonconvex_symmetry_axis_gradient_vanishes():
    # the number-breaking parameter has exactly zero gradient on its
    # symmetry plane, by shift rule and by finite differences
    a = builtin("h2_nonconvex")
    rng = np.random.default_rng(21)
    for theta1 in rng.uniform(-np.pi, np.pi, 10):
        theta = np.array([theta1, 0.0])
        assert abs(gradient(a, SYNTH, theta)[1]) < 1e-14
        assert abs(gradient_fd(a, SYNTH, theta, h=1e-6)[1]) < 1e-8


def test_ansatz_validation():
    with pytest.raises(ValueError, match="identity"):
        AnsatzGate(PauliString("II"), 0)
    with pytest.raises(ValueError, match="scale"):
        AnsatzGate(PauliString("XY"), 0, 0.0)
    with pytest.raises(ValueError, match="cover"):
        Ansatz(2, "01", (AnsatzGate(PauliString("XY"), 1),))
    with pytest.raises(ValueError, match="bitstring"):
        Ansatz(2, "012", (AnsatzGate(PauliString("XY"), 0),))
    with pytest.raises(ValueError):
        energy_at(builtin("h2_ucc"), SYNTH, [0.1, 0.2])


def test_load_ansatz_round_trip(tmp_path):
    doc = {
        "n_qubits": 2,
        "reference": "01",
        "gates": [
            {"pauli": "XY", "param": 0},
            {"pauli": "XI", "param": 1, "scale": 2.0},
            {"pauli": "IX", "param": 1, "scale": 1.5},
        ],
    }
    path = tmp_path / "ansatz.json"
    path.write_text(json.dumps(doc))
    a = load_ansatz(path)
    assert a == builtin("h2_nonconvex")
    path.write_text(json.dumps({"n_qubits": 2, "gates": []}))
    with pytest.raises(ValueError):
        load_ansatz(path)
