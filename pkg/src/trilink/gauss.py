"""Pairwise linking numbers and degrees of the Gauss map on coordinate subtori."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import geometry as geo
from .errors import CorrespondenceMismatch, DisjointnessViolation
from .fields import pullback_density, spectral_derivative
from .link import DISJOINT_EPS, angles

# Accept a real invariant as an integer only this close to it.
ROUND_TOL = 0.1
MATCH_TOL = 0.1

# Frozen axis -> (free axes in cyclic order, component pair whose linking
# number the subtorus carries).
SLOTS = {
    "s": (("t", "u"), ("y", "z")),
    "t": (("u", "s"), ("z", "x")),
    "u": (("s", "t"), ("x", "y")),
}


def pairwise_linking(A, B, samples=512, eps=DISJOINT_EPS):
    """Gauss linking integral of two closed curves.

    Equal-weight periodic trapezoid rule on a samples x samples grid,
    spectrally accurate for disjoint analytic curves.
    """
    if samples < 8:
        raise ValueError("need at least 8 samples")
    th = angles(samples)
    x, dx = A.eval(th), A.derivative(th)
    y, dy = B.eval(th), B.derivative(th)
    d = x[:, None, :] - y[None, :, :]
    r = geo.norm(d)
    i, j = np.unravel_index(np.argmin(r), r.shape)
    if r[i, j] <= eps:
        raise DisjointnessViolation(
            f"curves come within {r[i, j]:.3g} at parameters {th[i]:.6f}, {th[j]:.6f}",
            params=(float(th[i]), float(th[j])),
            distance=float(r[i, j]),
        )
    integrand = geo.dot(geo.cross(dx[:, None, :], dy[None, :, :]), d) / r**3
    h = 2.0 * math.pi / samples
    return float(integrand.sum() * h * h / (4.0 * math.pi))


def _subtorus_field(link, axis, fixed_value, grid):
    th = angles(grid)
    x, y, z = (c.eval(th) for c in link.components)
    frozen = {"s": link.cx, "t": link.cy, "u": link.cz}[axis].eval(fixed_value)
    # Arrange the two free axes as (first, second) in cyclic order.
    if axis == "s":
        pts = (frozen, y[:, None], z[None, :])
    elif axis == "t":
        pts = (x[None, :], frozen, z[:, None])
    else:
        pts = (x[:, None], y[None, :], frozen)
    return geo.key_map_E(*pts)


def subtorus_degree(link, axis, fixed_value=0.0, grid=128):
    """Degree of the Gauss map on the 2-torus where ``axis`` is frozen.

    Integrates the pulled-back unit-area form over the two free parameters,
    taken in cyclic order (t,u), (u,s) or (s,t).
    """
    if axis not in SLOTS:
        raise ValueError(f"axis must be one of s, t, u; got {axis!r}")
    if grid < 16:
        raise ValueError("grid must be at least 16")
    F = _subtorus_field(link, axis, fixed_value, grid)
    Fv = spectral_derivative(F, 0)
    Fw = spectral_derivative(F, 1)
    h = 2.0 * math.pi / grid
    return float(pullback_density(F, Fv, Fw).sum() * h * h)


def round_invariant(value, tol=ROUND_TOL):
    """Nearest integer if within ``tol``, else None (not converged)."""
    n = round(value)
    return int(n) if abs(value - n) < tol else None


@dataclass
class PairwiseReport:
    lk_yz: float
    lk_zx: float
    lk_xy: float
    rounded: tuple = field(init=False)
    residual: float = field(init=False)
    converged: bool = field(init=False)

    def __post_init__(self):
        vals = self.values
        self.rounded = tuple(int(round(v)) for v in vals)
        self.residual = max(abs(v - n) for v, n in zip(vals, self.rounded))
        self.converged = self.residual < ROUND_TOL

    @property
    def values(self):
        return (self.lk_yz, self.lk_zx, self.lk_xy)

    @property
    def null(self):
        return self.converged and self.rounded == (0, 0, 0)


@dataclass
class InvariantReport:
    gauss: PairwiseReport
    degrees: dict  # axis -> raw subtorus degree

    @property
    def pqr(self):
        return self.gauss.rounded


def pairwise_report(link, samples=512):
    X, Y, Z = link.components
    return PairwiseReport(
        pairwise_linking(Y, Z, samples),
        pairwise_linking(Z, X, samples),
        pairwise_linking(X, Y, samples),
    )


def subtorus_degrees(link, grid=128, fixed_value=0.0):
    return {ax: subtorus_degree(link, ax, fixed_value, grid) for ax in ("s", "t", "u")}


def invariant_report(link, samples=512, grid=128):
    """Gauss integrals and subtorus degrees, checked against each other.

    Raises CorrespondenceMismatch if a degree and its Gauss integral differ
    by 0.1 or more.
    """
    gauss = pairwise_report(link, samples)
    degrees = subtorus_degrees(link, grid)
    for (ax, (_, pair)), lk in zip(SLOTS.items(), gauss.values):
        if abs(degrees[ax] - lk) >= MATCH_TOL:
            raise CorrespondenceMismatch(
                f"subtorus {ax}: degree {degrees[ax]:.6f} but "
                f"Lk({pair[0].upper()},{pair[1].upper()}) = {lk:.6f}",
                entry=ax,
            )
    return InvariantReport(gauss, degrees)
