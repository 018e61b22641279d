"""Fourier coefficients of vector fields on the 3-torus.

Coefficients follow the series convention ``v(x) = sum_n c_n exp(i n.x)``,
so the discrete estimate is the plain DFT divided by N^3. They are stored in
FFT index order: array index j holds mode j for j <= N/2 and j - N above.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import Grid3Field


@dataclass(frozen=True, eq=False)
class FourierField:
    """Complex 3-vector coefficient per mode, shape (N, N, N, 3)."""

    coeffs: np.ndarray

    @property
    def N(self):
        return self.coeffs.shape[0]

    def mode_numbers(self):
        """Signed integer mode per array index, in (-N/2, N/2]."""
        N = self.N
        m = np.fft.fftfreq(N, 1.0 / N)
        m[N // 2] = N // 2
        return m

    def index(self, n):
        return tuple(int(k) % self.N for k in n)

    def __getitem__(self, n):
        """Coefficient vector of mode ``n = (n_s, n_t, n_u)``."""
        return self.coeffs[self.index(n)]

    @property
    def c0(self):
        return self.coeffs[0, 0, 0]

    @property
    def a(self):
        return self.coeffs.real

    @property
    def b(self):
        return self.coeffs.imag


def dft3(grid):
    """c_n = N^-3 sum_{jkl} data[j,k,l] exp(-i n.x_jkl), one component at a time."""
    data = grid.data if isinstance(grid, Grid3Field) else np.asarray(grid)
    N = data.shape[0]
    out = np.empty(data.shape, dtype=complex)
    for i in range(data.shape[-1]):
        out[..., i] = np.fft.fftn(data[..., i])
    out /= N**3
    return FourierField(out)


def idft3(field, real=True):
    """Inverse of dft3. With ``real=True`` the imaginary residue is dropped
    after checking it is at round-off level."""
    c = field.coeffs
    N = c.shape[0]
    out = np.empty(c.shape, dtype=complex)
    for i in range(c.shape[-1]):
        out[..., i] = np.fft.ifftn(c[..., i])
    out *= N**3
    if not real:
        return out
    scale = max(1.0, float(np.abs(out.real).max()))
    leak = float(np.abs(out.imag).max())
    if leak > 1e-8 * scale:
        raise ValueError(f"inverse transform is not real (imaginary part {leak:.3g})")
    return Grid3Field(np.ascontiguousarray(out.real))


def dft3_direct(grid):
    """O(N^6) direct summation of the same transform; for small N only."""
    data = grid.data if isinstance(grid, Grid3Field) else np.asarray(grid)
    N = data.shape[0]
    if N > 16:
        raise ValueError("direct transform is only meant for N <= 16")
    idx = np.arange(N)
    J, K, L = np.meshgrid(idx, idx, idx, indexing="ij")
    nodes = np.stack([J, K, L], -1).reshape(-1, 3) * (2 * np.pi / N)
    modes = np.stack([J, K, L], -1).reshape(-1, 3)
    phase = np.exp(-1j * modes @ nodes.T)
    c = phase @ data.reshape(-1, data.shape[-1]) / N**3
    return FourierField(c.reshape(data.shape))
