import numpy as np
import pytest

from snakevqe.ansatz import builtin, energy_at, gradient
from snakevqe.objectives import (
    QuadraticFamily,
    STFamily,
    VQEFamily,
    st_barrier,
    st_gradient,
    st_minima,
    st_value,
)
from snakevqe.oracle import ground_energy
from snakevqe.pauli import synth_h2_family

ROOT8 = np.sqrt(8.0)


def test_st_value_anchors():
    assert st_value(0.0, 3.7) == 0.0
    assert abs(st_value(ROOT8, 0.0) - (-32.0)) < 1e-12
    assert st_value(2.0, 6.0) == -18.0


def test_st_gradient_anchors():
    assert st_gradient(0.0, 0.0) == 0.0
    assert st_gradient(2.0, 6.0) == -13.0
    assert abs(st_gradient(ROOT8, 0.0)) < 1e-13


def test_st_minima_symmetric_at_zero_tilt():
    xg, xl = st_minima(0.0)
    assert abs(xg + ROOT8) < 1e-10 and abs(xl - ROOT8) < 1e-10
    assert abs(st_value(xg, 0.0) - st_value(xl, 0.0)) < 1e-12


def test_st_minima_global_is_negative_for_positive_tilt():
    for t in (0.5, 3.0, 6.0):
        xg, xl = st_minima(t)
        assert xg < 0 < xl
        assert st_value(xg, t) < st_value(xl, t)
        assert abs(st_gradient(xg, t)) < 1e-9 and abs(st_gradient(xl, t)) < 1e-9
        assert xg < st_barrier(t) < xl


def test_st_minima_range_check():
    with pytest.raises(ValueError):
        st_minima(-0.5)
    with pytest.raises(ValueError):
        st_minima(6.5)


def test_st_family_grid_validation():
    with pytest.raises(ValueError):
        STFamily([0.0, 0.0, 1.0])
    with pytest.raises(ValueError):
        STFamily([-1.0, 0.0])
    fam = STFamily.default(61)
    assert fam.M == 61 and fam.K == 1
    assert fam.label(0) == 0.0 and fam.label(60) == 6.0


def test_st_family_gradient_is_exact_derivative():
    fam = STFamily.default(13)
    rng = np.random.default_rng(0)
    for m in (0, 5, 12):
        x = rng.uniform(-4, 4)
        assert fam.gradient(m, [x])[0] == st_gradient(x, fam.label(m))


def test_st_family_batched_matches_single():
    fam = STFamily.default(9)
    rng = np.random.default_rng(1)
    Theta = rng.uniform(-4, 4, size=(9, 1))
    np.testing.assert_allclose(
        fam.value_all(Theta), [fam.value(m, Theta[m]) for m in range(9)], atol=1e-14
    )
    np.testing.assert_allclose(
        fam.gradient_all(Theta),
        np.stack([fam.gradient(m, Theta[m]) for m in range(9)]),
        atol=1e-14,
    )


@pytest.fixture(scope="module")
def vqe_family():
    return VQEFamily(synth_h2_family(7, 0.25, 2.85), builtin("h2_ucc"))


def test_vqe_family_value_is_ansatz_energy(vqe_family):
    rng = np.random.default_rng(2)
    for m in range(vqe_family.M):
        theta = rng.uniform(-np.pi, np.pi, 1)
        h = vqe_family.family.points[m][1]
        assert abs(vqe_family.value(m, theta) - energy_at(vqe_family.ansatz, h, theta)) < 1e-14
        np.testing.assert_allclose(
            vqe_family.gradient(m, theta), gradient(vqe_family.ansatz, h, theta), atol=1e-14
        )


def test_vqe_family_batched_matches_single(vqe_family):
    rng = np.random.default_rng(3)
    Theta = rng.uniform(-np.pi, np.pi, size=(vqe_family.M, 1))
    np.testing.assert_allclose(
        vqe_family.value_all(Theta),
        [vqe_family.value(m, Theta[m]) for m in range(vqe_family.M)],
        atol=1e-12,
    )
    np.testing.assert_allclose(
        vqe_family.gradient_all(Theta),
        np.stack([vqe_family.gradient(m, Theta[m]) for m in range(vqe_family.M)]),
        atol=1e-12,
    )


def test_vqe_family_gradient_matches_finite_differences(vqe_family):
    rng = np.random.default_rng(4)
    h = 1e-5
    for m in (0, 3, 6):
        theta = rng.uniform(-np.pi, np.pi, 1)
        up = vqe_family.value(m, theta + h)
        down = vqe_family.value(m, theta - h)
        assert abs(vqe_family.gradient(m, theta)[0] - (up - down) / (2 * h)) < 1e-6


def test_vqe_family_values_respect_oracle_bound(vqe_family):
    rng = np.random.default_rng(5)
    floors = [ground_energy(h) for h in vqe_family.family.hamiltonians]
    for _ in range(20):
        Theta = rng.uniform(-np.pi, np.pi, size=(vqe_family.M, 1))
        assert np.all(vqe_family.value_all(Theta) >= np.array(floors) - 1e-9)


def test_vqe_family_requires_matching_qubits():
    with pytest.raises(ValueError):
        VQEFamily(synth_h2_family(5, 0.5, 1.5), builtin("lih_ucc"))


def test_quadratic_family():
    centers = np.array([[0.0, 1.0], [2.0, -1.0], [0.5, 0.5], [1.0, 0.0], [-1.0, 2.0]])
    fam = QuadraticFamily(centers)
    assert fam.M == 5 and fam.K == 2
    assert fam.value(1, centers[1]) == 0.0
    np.testing.assert_allclose(fam.gradient(0, [1.0, 1.0]), [1.0, 0.0])
    Theta = np.zeros((5, 2))
    np.testing.assert_allclose(fam.value_all(Theta), 0.5 * np.sum(centers**2, axis=1))
