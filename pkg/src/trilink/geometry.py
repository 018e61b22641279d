"""Pointwise geometry of point triples.

Vectors are numpy arrays with a trailing axis of length 3; quaternions have a
trailing axis of length 4 ordered ``(re, i, j, k)`` with ``ij = k``, so that
R^3 is the span of the imaginary units. Every function broadcasts over the
leading axes, which is how the grid code evaluates whole tori at once.
"""

import numpy as np

from .errors import DegenerateInput

#: Relative distinctness tolerance: a pair closer than this times the
#: triangle's longest side is treated as coincident.
DISTINCT_RTOL = 1e-12


def dot(u, v):
    return np.einsum("...i,...i->...", u, v)


def norm(v):
    return np.sqrt(dot(v, v))


def cross(u, v):
    u0, u1, u2 = u[..., 0], u[..., 1], u[..., 2]
    v0, v1, v2 = v[..., 0], v[..., 1], v[..., 2]
    return np.stack([u1 * v2 - u2 * v1, u2 * v0 - u0 * v2, u0 * v1 - u1 * v0], axis=-1)


def _sides(x, y, z):
    x, y, z = (np.asarray(p, dtype=float) for p in (x, y, z))
    return z - y, x - z, y - x


def _check_distinct(la, lb, lc):
    longest = np.maximum(np.maximum(la, lb), lc)
    shortest = np.minimum(np.minimum(la, lb), lc)
    bad = ~(shortest > DISTINCT_RTOL * longest)
    if np.any(bad):
        raise DegenerateInput(
            f"coincident points: shortest side {np.min(shortest):.3g} "
            f"against longest {np.max(longest):.3g}"
        )


def key_map_parts(x, y, z):
    """Return the in-plane part ``[a]+[b]+[c]`` and the normal part of F.

    The normal part ``[b,c]+[c,a]+[a,b]`` equals (sin α + sin β + sin γ) n;
    it is assembled from cross products of unit sides so that collinear
    triples give exactly zero without ever forming n.
    """
    a, b, c = _sides(x, y, z)
    la, lb, lc = norm(a), norm(b), norm(c)
    _check_distinct(la, lb, lc)
    ua = a / la[..., None]
    ub = b / lb[..., None]
    uc = c / lc[..., None]
    tangential = ua + ub + uc
    normal = cross(ub, uc) + cross(uc, ua) + cross(ua, ub)
    return tangential, normal


def key_map_E(x, y, z):
    """Euclidean key map F(x, y, z) with sides a = z-y, b = x-z, c = y-x.

    Never zero for distinct points. Raises DegenerateInput if two of the
    points coincide.
    """
    tangential, normal = key_map_parts(x, y, z)
    return tangential + normal


def normalized_key_map_E(x, y, z):
    F = key_map_E(x, y, z)
    return F / norm(F)[..., None]


# -- quaternions -------------------------------------------------------------

def quaternion(re, im):
    """Pack a real part and an imaginary 3-vector into a quaternion array."""
    re = np.asarray(re, dtype=float)
    im = np.asarray(im, dtype=float)
    re, _ = np.broadcast_arrays(re, im[..., 0])
    return np.concatenate([re[..., None], im], axis=-1)


def qmul(p, q):
    p0, pv = p[..., 0], p[..., 1:]
    q0, qv = q[..., 0], q[..., 1:]
    re = p0 * q0 - dot(pv, qv)
    im = p0[..., None] * qv + q0[..., None] * pv + cross(pv, qv)
    return quaternion(re, im)


def qconj(q):
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def inverse_stereographic(q):
    """Inverse stereographic projection h: R^3 -> S^3 - {-1} from -1.

    ``h(q) = (1-|q|^2)/(1+|q|^2) + 2q/(1+|q|^2)``; the origin goes to 1.
    """
    q = np.asarray(q, dtype=float)
    n2 = dot(q, q)
    denom = 1.0 + n2
    return quaternion((1.0 - n2) / denom, 2.0 * q / denom[..., None])


def key_map_S(u, v, w):
    """Spherical key map ``Im((v - w) * conj(u - w))`` for points of S^3."""
    u, v, w = (np.asarray(p, dtype=float) for p in (u, v, w))
    d1 = v - w
    d2 = u - w
    l1, l2, l3 = norm(d1), norm(d2), norm(u - v)
    _check_distinct(l1, l2, l3)
    return qmul(d1, qconj(d2))[..., 1:]


def based_lift(x, y, z):
    """Translate z to the origin then lift: ``(h(x-z), h(y-z), 1)``."""
    a, b, c = _sides(x, y, z)
    _check_distinct(norm(a), norm(b), norm(c))
    x, y, z = (np.asarray(p, dtype=float) for p in (x, y, z))
    hx = inverse_stereographic(x - z)
    hy = inverse_stereographic(y - z)
    one = np.zeros_like(hx)
    one[..., 0] = 1.0
    return hx, hy, one


def reduced_bridge_map(x, y, z):
    """``|a|^2 b + a |b|^2 + a x b``, the spherical key map of the based lift
    with the positive factor C stripped off."""
    a, b, c = _sides(x, y, z)
    la2, lb2 = dot(a, a), dot(b, b)
    _check_distinct(np.sqrt(la2), np.sqrt(lb2), norm(c))
    return la2[..., None] * b + a * lb2[..., None] + cross(a, b)


def bridge_scale(x, y, z):
    """The factor ``C = 4 / ((1+|a|^2)(1+|b|^2))``."""
    a, b, _ = _sides(x, y, z)
    return 4.0 / ((1.0 + dot(a, a)) * (1.0 + dot(b, b)))


def bridge_gap(x, y, z):
    """Cosine of the angle between f_E and the normalized spherical key map
    of the based lift. Stays strictly above -1 for distinct points."""
    fe = normalized_key_map_E(x, y, z)
    fs = key_map_S(*based_lift(x, y, z))
    fs = fs / norm(fs)[..., None]
    return dot(fe, fs)
