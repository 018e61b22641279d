"""Fundamental solution of the scalar Laplacian on the flat torus.

phi(x) = (2 pi)^-d sum_{n != 0} exp(i n.x) / |n|^2, truncated to the cube
max_i |n_i| <= cutoff. The truncated sum is finite everywhere, including at
the lattice points where the full series diverges.
"""

from __future__ import annotations

import math

import numpy as np

IMAG_TOL = 1e-10
_CHUNK = 4096


def lattice_modes(cutoff, dim=3):
    """Nonzero integer vectors with sup-norm at most ``cutoff``."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    r = np.arange(-cutoff, cutoff + 1)
    n = np.stack(np.meshgrid(*([r] * dim), indexing="ij"), -1).reshape(-1, dim)
    return n[np.any(n != 0, axis=1)].astype(float)


def _series(x, cutoff, dim, gradient):
    x = np.asarray(x, dtype=float)
    shape = x.shape[:-1]
    pts = x.reshape(-1, dim)
    n = lattice_modes(cutoff, dim)
    w = 1.0 / (n**2).sum(axis=1)
    norm = (2.0 * math.pi) ** -dim
    width = dim if gradient else 1
    out = np.empty((len(pts), width), dtype=complex)
    for i0 in range(0, len(pts), _CHUNK):
        e = np.exp(1j * pts[i0:i0 + _CHUNK] @ n.T) * w
        out[i0:i0 + _CHUNK] = 1j * (e @ n) if gradient else e.sum(axis=1, keepdims=True)
    out *= norm
    leak = float(np.abs(out.imag).max(initial=0.0))
    if leak > IMAG_TOL:
        raise ArithmeticError(f"series has imaginary part {leak:.3g}")
    out = out.real
    return out.reshape(shape + ((dim,) if gradient else ()))


def phi(x, cutoff):
    """Truncated fundamental solution on T^3 at point(s) x of shape (..., 3)."""
    return _series(x, cutoff, 3, gradient=False)


def grad_phi(x, cutoff):
    """Termwise gradient (2 pi)^-3 sum i n exp(i n.x) / |n|^2."""
    return _series(x, cutoff, 3, gradient=True)


def phi2d(x, cutoff):
    """The T^2 analogue, normalized by 1/(4 pi^2)."""
    return _series(x, cutoff, 2, gradient=False)

