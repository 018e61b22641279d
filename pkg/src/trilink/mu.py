"""Milnor's triple linking number from the characteristic 2-form.

Three routes to the same number, valid only when all pairwise linking
numbers vanish:

* ``mu_fourier``: 8 pi^3 sum_{n != 0} (a_n x b_n) . n / |n|^2 over the
  Fourier coefficients c_n = a_n + i b_n of the form;
* ``mu_whitehead``: half the integral of alpha ^ omega with alpha the
  least-L2-norm primitive, evaluated in real space;
* ``mu_helicity``: half the helicity of the characteristic vector field,
  as a direct double sum against grad phi (validation only, O(N^6)).
"""

from __future__ import annotations

import math

import numpy as np

from . import fields
from .errors import GridTooLarge, NotNullHomologous
from .fourier import FourierField, dft3, idft3
from .gauss import subtorus_degrees
from .green import grad_phi

NULL_TOL = 1e-3
HELICITY_MAX_N = 24
EIGHT_PI3 = 8.0 * math.pi**3


def require_exact(coeffs, tol=NULL_TOL):
    """Refuse forms whose mean (c_0) shows a nonzero pairwise linking number."""
    c0 = float(np.abs(coeffs.c0).max())
    if c0 >= tol:
        raise NotNullHomologous(
            f"|c_0| = {c0:.3g}: pairwise linking numbers are not all zero"
        )


def require_null_degrees(link, grid=128, tol=NULL_TOL):
    degrees = subtorus_degrees(link, grid)
    worst = max(degrees, key=lambda ax: abs(degrees[ax]))
    if abs(degrees[worst]) >= tol:
        raise NotNullHomologous(
            f"subtorus degree on the {worst}-frozen torus is {degrees[worst]:.6f}; "
            "the triple linking formulas need p = q = r = 0"
        )
    return degrees


def _axis_modes(N, cutoff):
    K = N // 2 - 1 if cutoff is None else int(cutoff)
    if K < 1 or K > N // 2:
        raise ValueError(f"cutoff must lie in [1, {N // 2}] for N = {N}, got {cutoff}")
    n = np.arange(-K, K + 1)
    return n, n % N


def mu_fourier(coeffs, cutoff=None):
    """Triple linking number from the Fourier coefficients of the form.

    Sums over modes with max |n_i| <= cutoff. The default uses every mode
    strictly inside the Nyquist band, (-N/2, N/2) per axis. A cutoff of N/2
    reads the Nyquist coefficients for both n_i = +N/2 and -N/2 (aliasing).
    """
    require_exact(coeffs)
    n, idx = _axis_modes(coeffs.N, cutoff)
    nt = n[:, None].astype(float)
    nu = n[None, :].astype(float)
    total = 0.0
    for i, ns in zip(idx, n):
        c = coeffs.coeffs[i][np.ix_(idx, idx)]
        a, b = c.real, c.imag
        axb_s = a[..., 1] * b[..., 2] - a[..., 2] * b[..., 1]
        axb_t = a[..., 2] * b[..., 0] - a[..., 0] * b[..., 2]
        axb_u = a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]
        n2 = ns * ns + nt * nt + nu * nu
        if ns == 0:
            n2 = n2.copy()
            n2[n2 == 0] = np.inf
        total += float(np.sum((axb_s * ns + axb_t * nt + axb_u * nu) / n2))
    return EIGHT_PI3 * total


def _mode_grid(N):
    m = np.fft.fftfreq(N, 1.0 / N)
    valid = np.ones(N, bool)
    valid[N // 2] = False
    S, T, U = np.meshgrid(m, m, m, indexing="ij", sparse=True)
    inside = valid[:, None, None] & valid[None, :, None] & valid[None, None, :]
    return (S, T, U), inside


def curl_coeffs(coeffs):
    """Spectral curl: i n x c_n, Nyquist modes dropped."""
    (S, T, U), inside = _mode_grid(coeffs.N)
    c = coeffs.coeffs
    out = np.empty_like(c)
    out[..., 0] = 1j * (T * c[..., 2] - U * c[..., 1])
    out[..., 1] = 1j * (U * c[..., 0] - S * c[..., 2])
    out[..., 2] = 1j * (S * c[..., 1] - T * c[..., 0])
    out[~inside] = 0.0
    return FourierField(out)


def least_norm_primitive(coeffs):
    """Coefficients of the least-L2-norm primitive: i (n x c_n) / |n|^2.

    The zero mode and the Nyquist planes are set to zero, which keeps the
    primitive real and mean-free.
    """
    require_exact(coeffs)
    (S, T, U), _ = _mode_grid(coeffs.N)
    n2 = S * S + T * T + U * U
    n2 = np.where(n2 == 0, np.inf, n2)
    A = curl_coeffs(coeffs).coeffs
    A /= n2[..., None]
    return FourierField(A)


def _as_gauge(gauge, N):
    if gauge is None:
        return None
    if callable(gauge):
        th = fields.angles(N)
        s, t, u = np.meshgrid(th, th, th, indexing="ij")
        gauge = gauge(s, t, u)
    g = np.asarray(gauge, dtype=float)
    if g.shape != (N, N, N, 3):
        raise ValueError(f"gauge must have shape {(N, N, N, 3)}, got {g.shape}")
    return g


def whitehead_integral(form, gauge=None):
    """Half the integral of alpha ^ d(alpha) over the torus.

    alpha is the least-norm primitive of the sampled form, optionally plus
    ``gauge`` (a 1-form grid of shape (N, N, N, 3), or a callable of the
    node coordinate arrays s, t, u returning one). The 2-form paired with
    alpha is d(alpha) itself, i.e. the closed part of the sampled form.
    """
    coeffs = dft3(form)
    A = least_norm_primitive(coeffs)
    alpha = idft3(A).data
    omega = idft3(curl_coeffs(A)).data
    g = _as_gauge(gauge, form.N)
    if g is not None:
        alpha = alpha + g
    h = form.spacing
    return 0.5 * h**3 * float(np.dot(alpha.ravel(), omega.ravel()))


def mu_fourier_link(link, N, cutoff=None, degree_grid=128):
    require_null_degrees(link, degree_grid)
    return mu_fourier(dft3(fields.characteristic_form(link, N)), cutoff)


def mu_whitehead(link, N, gauge=None, degree_grid=128):
    require_null_degrees(link, degree_grid)
    return whitehead_integral(fields.characteristic_form(link, N), gauge)


def mu_spherical(link, N, degree_grid=128):
    """Same pipeline as ``mu_whitehead`` on the Gauss map of the link lifted
    to S^3 by inverse stereographic projection."""
    require_null_degrees(link, degree_grid)
    return whitehead_integral(fields.spherical_form(link, N))


def helicity_table(N, cutoff):
    """grad_y phi(x - y) for every grid offset d = x - y."""
    th = fields.angles(N)
    d = np.stack(np.meshgrid(th, th, th, indexing="ij"), -1)
    return -grad_phi(d, cutoff)


def helicity_sum(V, cutoff):
    """Half the double Riemann sum of V(x) x V(y) . grad_y phi(x - y)."""
    N = V.shape[0]
    G = helicity_table(N, cutoff)
    flat = V.reshape(-1, 3)
    total = 0.0
    for d in np.ndindex(N, N, N):
        Vy = np.roll(V, d, axis=(0, 1, 2)).reshape(-1, 3)  # Vy[x] = V[x - d]
        M = flat.T @ Vy
        w = np.array([M[1, 2] - M[2, 1], M[2, 0] - M[0, 2], M[0, 1] - M[1, 0]])
        total += float(w @ G[d])
    h = 2.0 * math.pi / N
    return 0.5 * h**6 * total


def mu_helicity(link, N_small, cutoff=None, degree_grid=128):
    """Validation route: matches ``mu_fourier`` restricted to the same modes."""
    if N_small > HELICITY_MAX_N:
        raise GridTooLarge(
            f"helicity double sum is O(N^6); N = {N_small} exceeds {HELICITY_MAX_N}"
        )
    require_null_degrees(link, degree_grid)
    form = fields.characteristic_form(link, N_small)
    require_exact(dft3(form))
    return helicity_sum(form.data, N_small // 2 if cutoff is None else cutoff)


METHODS = {
    "fourier": mu_fourier_link,
    "whitehead": mu_whitehead,
    "helicity": mu_helicity,
    "spherical": mu_spherical,
}
