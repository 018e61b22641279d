import numpy as np
import pytest

from trilink.fields import Grid3Field, characteristic_form
from trilink.fourier import FourierField, dft3, dft3_direct, idft3
from trilink.link import angles


def test_constant_field():
    v = np.array([1.0, -2.0, 0.5])
    c = dft3(Grid3Field(np.broadcast_to(v, (8, 8, 8, 3)).copy()))
    np.testing.assert_allclose(c.c0, v, atol=1e-15)
    rest = c.coeffs.copy()
    rest[0, 0, 0] = 0
    assert np.abs(rest).max() < 1e-15


def test_cosine_field():
    v = np.array([0.3, 1.0, -2.0])
    th = angles(8)
    data = np.cos(th)[:, None, None, None] * v * np.ones((8, 8, 8, 3))
    c = dft3(Grid3Field(data))
    np.testing.assert_allclose(c[1, 0, 0], v / 2, atol=1e-15)
    np.testing.assert_allclose(c[-1, 0, 0], v / 2, atol=1e-15)
    assert np.abs(c[0, 0, 0]).max() < 1e-15


def test_matches_direct_summation(rng):
    data = rng.normal(size=(8, 8, 8, 3))
    fast = dft3(Grid3Field(data)).coeffs
    slow = dft3_direct(Grid3Field(data)).coeffs
    np.testing.assert_allclose(fast, slow, atol=1e-13)


def test_round_trip(rng):
    data = rng.normal(size=(16, 16, 16, 3))
    back = idft3(dft3(Grid3Field(data))).data
    assert np.abs(back - data).max() < 1e-10


def test_reality_symmetry(rng, borromean):
    for data in (rng.normal(size=(8, 8, 8, 3)), characteristic_form(borromean, 16).data):
        c = dft3(Grid3Field(data))
        N = c.N
        for n in np.ndindex(N, N, N):
            m = tuple(-k for k in n)
            np.testing.assert_allclose(c[m], np.conj(c[n]), atol=1e-12)


def test_mode_numbers():
    f = FourierField(np.zeros((8, 8, 8, 3), complex))
    np.testing.assert_array_equal(f.mode_numbers(), [0, 1, 2, 3, 4, -3, -2, -1])
    assert f.index((-1, 4, -4)) == (7, 4, 4)


def test_exactness_for_null_links(borromean):
    c = dft3(characteristic_form(borromean, 64))
    assert np.abs(c.c0).max() < 1e-6


def test_complex_inverse_refused_when_not_real():
    c = np.zeros((8, 8, 8, 3), complex)
    c[1, 0, 0, 0] = 1.0
    with pytest.raises(ValueError):
        idft3(FourierField(c))
    assert np.abs(idft3(FourierField(c), real=False)).max() == pytest.approx(1.0)
