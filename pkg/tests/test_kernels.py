import numpy as np
import pytest

from bicomplex import _pykernels

ck = pytest.importorskip("bicomplex._ckernels")


@pytest.fixture
def mats():
    rng = np.random.default_rng(7)
    return [rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for n in (1, 2, 3, 5, 8)]


def test_charpoly_agrees(mats):
    for a in mats:
        np.testing.assert_allclose(ck.charpoly(a), _pykernels.charpoly(a), rtol=1e-13, atol=1e-13)
        np.testing.assert_allclose(_pykernels.charpoly(a), np.poly(a), rtol=1e-9, atol=1e-9)


def test_durand_kerner_agrees(mats):
    for a in mats:
        c = np.poly(a)
        r1, _, ok1 = ck.durand_kerner(c, 500, 1e-13)
        r2, _, ok2 = _pykernels.durand_kerner(c, 500, 1e-13)
        assert ok1 and ok2
        np.testing.assert_allclose(np.sort_complex(np.asarray(r1)),
                                   np.sort_complex(np.asarray(r2)), atol=1e-9)


def test_inverse_iteration_agrees(mats):
    for a in mats:
        n = a.shape[0]
        lam = np.linalg.eigvals(a)[0]
        shift = lam + 1e-10 * max(1, abs(lam))
        v0 = np.ones(n, dtype=complex)
        empty = np.zeros((0, n), dtype=complex)
        v1, res1, _ = ck.inverse_iteration(a, lam, shift, v0, empty, 50, 1e-13)
        v2, res2, _ = _pykernels.inverse_iteration(a, lam, shift, v0, empty, 50, 1e-13)
        v1, v2 = np.asarray(v1), np.asarray(v2)
        assert abs(abs(np.vdot(v1, v2)) - 1) <= 1e-8
        assert res1 <= 1e-8 and res2 <= 1e-8
