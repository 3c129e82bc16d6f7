import itertools

import numpy as np
import pytest

from snakevqe.ansatz import Ansatz, AnsatzGate, builtin
from snakevqe.oracle import (
    dense_matrix,
    grid_local_minima,
    grid_scan_min,
    ground_energy,
    word_matrix,
)
from snakevqe.pauli import Hamiltonian, PauliString, h2_point

SYNTH = h2_point(0.0, 0.5, -0.5, 0.2, 0.3, 0.3)
SYNTH_GROUND = -0.2 - np.sqrt(1.36)


def test_dense_single_z():
    mat = dense_matrix(Hamiltonian.from_terms(1, [(1.0, "Z")])).entries
    np.testing.assert_array_equal(mat, np.diag([1.0, -1.0]))


def test_dense_xx_antidiagonal():
    mat = dense_matrix(Hamiltonian.from_terms(2, [(1.0, "XX")])).entries
    np.testing.assert_array_equal(mat, np.fliplr(np.eye(4)))


def test_dense_kronecker_sum():
    h = Hamiltonian.from_terms(2, [(0.5, "ZI"), (0.5, "IZ")])
    np.testing.assert_array_equal(dense_matrix(h).entries, np.diag([1.0, 0.0, 0.0, -1.0]))


def test_dense_rejects_large_systems():
    h = Hamiltonian.from_terms(6, [(1.0, "ZZZZZZ")])
    with pytest.raises(ValueError):
        dense_matrix(h)


def test_ground_energy_single_pauli():
    assert abs(ground_energy(Hamiltonian.from_terms(1, [(1.0, "Z")])) + 1.0) < 1e-12
    assert abs(ground_energy(Hamiltonian.from_terms(1, [(1.0, "X")])) + 1.0) < 1e-12


def test_ground_energy_synthetic_point_block():
    mat = dense_matrix(SYNTH).entries
    block = mat[1:3, 1:3].real
    np.testing.assert_allclose(block, [[0.8, 0.6], [0.6, -1.2]], atol=1e-12)
    assert abs(ground_energy(SYNTH) - SYNTH_GROUND) < 1e-12


def test_every_word_squares_to_identity():
    for n in (1, 2):
        for letters in itertools.product("IXYZ", repeat=n):
            mat = word_matrix("".join(letters))
            np.testing.assert_allclose(mat @ mat, np.eye(2**n), atol=1e-12)
    rng = np.random.default_rng(0)
    for n in (3, 4):
        for _ in range(10):
            word = "".join(rng.choice(list("IXYZ"), n))
            mat = word_matrix(word)
            np.testing.assert_allclose(mat @ mat, np.eye(2**n), atol=1e-12)


def test_positive_scaling_and_identity_shift():
    rng = np.random.default_rng(1)
    words = ["".join(rng.choice(list("IXYZ"), 3)) for _ in range(5)]
    h = Hamiltonian.from_terms(3, [(rng.uniform(-1, 1), w) for w in words])
    e = ground_energy(h)
    for c in (0.5, 2.0, 7.3):
        scaled = Hamiltonian.from_terms(3, [(c * coeff, w) for coeff, w in h.terms])
        assert abs(ground_energy(scaled) - c * e) < 1e-10
    for s in (-1.2, 0.4):
        shifted = Hamiltonian.from_terms(3, list(h.terms) + [(s, "III")])
        assert abs(ground_energy(shifted) - (e + s)) < 1e-10


def test_grid_scan_finds_global_minimum():
    theta, e = grid_scan_min(builtin("h2_ucc"), SYNTH, 1024)
    assert abs(e - SYNTH_GROUND) < 1e-4
    assert e >= SYNTH_GROUND - 1e-9


def test_grid_scan_zero_hamiltonian():
    _, e = grid_scan_min(builtin("h2_ucc"), Hamiltonian(2, ()), 64)
    assert e == 0.0


def test_grid_scan_validation():
    with pytest.raises(ValueError, match="resolution"):
        grid_scan_min(builtin("h2_ucc"), SYNTH, 8)
    wide = Ansatz(
        2,
        "01",
        tuple(AnsatzGate(PauliString(w), i) for i, w in enumerate(("XY", "XI", "IX", "ZX"))),
    )
    with pytest.raises(ValueError, match="parameters"):
        grid_scan_min(wide, SYNTH, 32)


def test_nonconvex_landscape_has_multiple_basins():
    minima = grid_local_minima(builtin("h2_nonconvex"), SYNTH, 256)
    assert len(minima) > 1
    best = minima[0]
    assert abs(best[1] - SYNTH_GROUND) < 1e-3
