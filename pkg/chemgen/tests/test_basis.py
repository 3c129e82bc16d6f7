import numpy as np
import pytest

from chemgen.basis import _STO3G_2SP, _STO6G_2SP, build_basis, fit_sto_sp


def test_fit_reproduces_published_sto3g_sp_set():
    exps, c2s, c2p = fit_sto_sp(3)
    np.testing.assert_allclose(exps, _STO3G_2SP[0], rtol=2e-4)
    np.testing.assert_allclose(c2s, _STO3G_2SP[1], atol=2e-5)
    np.testing.assert_allclose(c2p, _STO3G_2SP[2], atol=2e-5)


@pytest.mark.slow
def test_frozen_sto6g_sp_set_matches_refit():
    exps, c2s, c2p = fit_sto_sp(6)
    np.testing.assert_allclose(exps, _STO6G_2SP[0], rtol=1e-4)
    np.testing.assert_allclose(c2s, _STO6G_2SP[1], atol=1e-5)
    np.testing.assert_allclose(c2p, _STO6G_2SP[2], atol=1e-5)


def test_build_basis_shapes():
    h2 = build_basis([("H", (0, 0, 0)), ("H", (0, 0, 1.4))], "STO-3G")
    assert len(h2) == 2 and all(f.l_total == 0 for f in h2)
    lih = build_basis([("Li", (0, 0, 0)), ("H", (0, 0, 3.0))], "STO-6G")
    assert len(lih) == 6
    assert [f.l_total for f in lih] == [0, 0, 1, 1, 1, 0]
    assert all(f.exps.size == 6 for f in lih)
    with pytest.raises(ValueError):
        build_basis([("H", (0, 0, 0))], "6-31G")
