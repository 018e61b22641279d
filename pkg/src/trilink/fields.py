"""Sampled fields on the 3-torus (R/2piZ)^3.

The generalized Gauss map is sampled unnormalized (as F) and its pullback of
the normalized area form is assembled from spectral partial derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry as geo
from .link import angles

FOUR_PI = 4.0 * math.pi

# s-slabs processed at a time; bounds temporaries to roughly
# SLAB_POINTS * 3 doubles per array.
SLAB_POINTS = 1 << 21


@dataclass(frozen=True, eq=False)
class Grid3Field:
    """N x N x N samples of a 3-vector at nodes (2 pi j/N, 2 pi k/N, 2 pi l/N).

    ``data[j, k, l]`` is the value at (s, t, u) = 2 pi (j, k, l) / N.
    """

    data: np.ndarray

    def __post_init__(self):
        d = self.data
        if d.ndim != 4 or d.shape[3] != 3 or not (d.shape[0] == d.shape[1] == d.shape[2]):
            raise ValueError(f"expected shape (N, N, N, 3), got {d.shape}")
        N = d.shape[0]
        if N < 8 or N % 2:
            raise ValueError(f"grid size must be even and at least 8, got {N}")

    @property
    def N(self):
        return self.data.shape[0]

    @property
    def spacing(self):
        return 2.0 * math.pi / self.N

    def coordinates(self):
        return angles(self.N)


def _slab(N):
    return max(1, SLAB_POINTS // (N * N))


def spectral_derivative(data, axis, out=None):
    """d/dθ along ``axis`` of real periodic samples over [0, 2pi).

    Mode m is multiplied by i m; the Nyquist mode is dropped.
    """
    N = data.shape[axis]
    m = np.fft.rfftfreq(N, 1.0 / N)
    if N % 2 == 0:
        m[-1] = 0.0
    shape = [1] * data.ndim
    shape[axis] = -1
    spec = np.fft.rfft(data, axis=axis)
    spec *= 1j * m.reshape(shape)
    res = np.fft.irfft(spec, n=N, axis=axis)
    if out is None:
        return res
    out[...] = res
    return out


def _sample(keymap, link, N, lift=None):
    th = angles(N)
    X, Y, Z = (c.eval(th) for c in link.components)
    if lift is not None:
        X, Y, Z = lift(X), lift(Y), lift(Z)
    out = np.empty((N, N, N, 3))
    step = _slab(N)
    for j0 in range(0, N, step):
        j1 = min(N, j0 + step)
        out[j0:j1] = keymap(X[j0:j1, None, None], Y[None, :, None], Z[None, None, :])
    return Grid3Field(out)


def sample_gauss_field(link, N):
    """F(x(s), y(t), z(u)) at every grid node (unnormalized Gauss map)."""
    return _sample(geo.key_map_E, link, N)


def sample_spherical_field(link, N):
    """F_S(h(x(s)), h(y(t)), h(z(u))) with h the inverse stereographic map."""
    return _sample(geo.key_map_S, link, N, lift=geo.inverse_stereographic)


def pullback_density(F, Fv, Fw):
    """(F_v x F_w) . F / (4 pi |F|^3): pullback of the unit-area form of S^2."""
    nF = geo.norm(F)
    return geo.dot(geo.cross(Fv, Fw), F) / (FOUR_PI * nF**3)


def form_from_field(field):
    """Characteristic 2-form components (p, q, r) of a sampled F.

    p, q, r are the dt^du, du^ds, ds^dt coefficients; read as a vector they
    are also the characteristic vector field.
    """
    F = field.data
    N = field.N
    step = _slab(N)
    Fs = np.empty_like(F)
    for k0 in range(0, N, step):
        k1 = min(N, k0 + step)
        spectral_derivative(F[:, k0:k1], 0, out=Fs[:, k0:k1])
    out = np.empty_like(F)
    for j0 in range(0, N, step):
        j1 = min(N, j0 + step)
        Fj = F[j0:j1]
        Ft = spectral_derivative(Fj, 1)
        Fu = spectral_derivative(Fj, 2)
        Fsj = Fs[j0:j1]
        out[j0:j1, ..., 0] = pullback_density(Fj, Ft, Fu)
        out[j0:j1, ..., 1] = pullback_density(Fj, Fu, Fsj)
        out[j0:j1, ..., 2] = pullback_density(Fj, Fsj, Ft)
    return Grid3Field(out)


def characteristic_form(link, N):
    return form_from_field(sample_gauss_field(link, N))


def spherical_form(link, N):
    return form_from_field(sample_spherical_field(link, N))


def iter_csv_rows(field):
    """Yield (j, k, l, s, t, u, v0, v1, v2) in row-major (j, k, l) order."""
    N = field.N
    th = field.coordinates()
    data = field.data
    for j in range(N):
        for k in range(N):
            for l in range(N):
                v = data[j, k, l]
                yield j, k, l, th[j], th[k], th[l], v[0], v[1], v[2]
