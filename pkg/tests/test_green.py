import itertools
import math

import numpy as np
import pytest

from trilink.green import grad_phi, lattice_modes, phi, phi2d


def phi_naive(x, cutoff):
    total = 0.0
    rng = range(-cutoff, cutoff + 1)
    for n in itertools.product(rng, rng, rng):
        if n == (0, 0, 0):
            continue
        total += math.cos(n[0] * x[0] + n[1] * x[1] + n[2] * x[2]) / (n[0] ** 2 + n[1] ** 2 + n[2] ** 2)
    return total / (8.0 * math.pi**3)


def test_mode_count():
    assert len(lattice_modes(8)) == 17**3 - 1
    assert len(lattice_modes(15, dim=2)) == 31**2 - 1
    with pytest.raises(ValueError):
        lattice_modes(0)


def test_even(rng):
    x = rng.uniform(-7, 7, size=(200, 3))
    np.testing.assert_allclose(phi(-x, 8), phi(x, 8), atol=1e-12)


def test_coordinate_permutations(rng):
    x = rng.uniform(-4, 4, size=(100, 3))
    base = phi(x, 8)
    for perm in itertools.permutations(range(3)):
        np.testing.assert_allclose(phi(x[:, perm], 8), base, atol=1e-12)


def test_mean_zero_over_period():
    M = 16
    th = 2 * np.pi * np.arange(M) / M
    grid = np.stack(np.meshgrid(th, th, th, indexing="ij"), -1)
    assert abs(phi(grid, 7).mean()) < 1e-12


def test_against_naive_summation():
    x = (math.pi, math.pi, math.pi)
    assert abs(phi(np.array(x), 15) - phi_naive(x, 15)) < 1e-12
    y = (0.3, -1.1, 2.5)
    assert abs(phi(np.array(y), 15) - phi_naive(y, 15)) < 1e-12


def test_gradient_odd_and_matches_finite_differences(rng):
    x = rng.uniform(-3, 3, size=(20, 3))
    np.testing.assert_allclose(grad_phi(-x, 6), -grad_phi(x, 6), atol=1e-12)
    h = 1e-5
    g = grad_phi(x, 6)
    for i in range(3):
        e = np.zeros(3)
        e[i] = h
        fd = (phi(x + e, 6) - phi(x - e, 6)) / (2 * h)
        np.testing.assert_allclose(g[:, i], fd, atol=1e-8)


def test_origin_gives_large_finite_value():
    v0 = phi(np.zeros(3), 8)
    assert np.isfinite(v0)
    assert v0 > phi(np.array([0.5, 0, 0]), 8) > 0
    assert phi(np.zeros(3), 16) > v0


def test_phi2d_structure():
    lattice = phi2d(np.zeros(2), 15)
    saddle = phi2d(np.array([math.pi, 0.0]), 15)
    centre = phi2d(np.array([math.pi, math.pi]), 15)
    assert lattice > saddle > centre
    np.testing.assert_allclose(phi2d(np.array([2 * math.pi, -2 * math.pi]), 15), lattice, atol=1e-10)
