"""Three-component links built from trigonometric-polynomial curves."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DisjointnessViolation, NotARotation, ParseError, UnknownPreset

TWO_PI = 2.0 * math.pi

DISJOINT_EPS = 1e-6
PROBE_SAMPLES = 512

COMPONENT_NAMES = ("x", "y", "z")


def angles(n):
    """The n equally spaced parameters 2*pi*j/n, j = 0..n-1."""
    return TWO_PI * np.arange(n) / n


@dataclass(frozen=True, eq=False)
class TrigCurve:
    """Closed curve sum_k cos_coeffs[k] cos(k t) + sin_coeffs[k] sin(k t).

    Both coefficient arrays have shape (K+1, 3).
    """

    cos_coeffs: np.ndarray
    sin_coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.cos_coeffs, dtype=float).reshape(-1, 3)
        s = np.array(self.sin_coeffs, dtype=float).reshape(-1, 3)
        K = max(len(c), len(s), 1)
        c = np.vstack([c, np.zeros((K - len(c), 3))])
        s = np.vstack([s, np.zeros((K - len(s), 3))])
        c.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "cos_coeffs", c)
        object.__setattr__(self, "sin_coeffs", s)

    @property
    def K(self):
        return len(self.cos_coeffs) - 1

    def _basis(self, theta):
        theta = np.mod(np.asarray(theta, dtype=float), TWO_PI)
        k = np.arange(self.K + 1)
        kt = theta[..., None] * k
        return np.cos(kt), np.sin(kt)

    def eval(self, theta):
        """Point(s) on the curve; output shape is ``shape(theta) + (3,)``."""
        cos_kt, sin_kt = self._basis(theta)
        return cos_kt @ self.cos_coeffs + sin_kt @ self.sin_coeffs

    __call__ = eval

    def derivative(self, theta):
        cos_kt, sin_kt = self._basis(theta)
        k = np.arange(self.K + 1)[:, None]
        return cos_kt @ (k * self.sin_coeffs) - sin_kt @ (k * self.cos_coeffs)

    def reversed(self):
        """Same curve traversed backward (t -> -t)."""
        return TrigCurve(self.cos_coeffs, -self.sin_coeffs)

    def to_dict(self):
        return {"cos": self.cos_coeffs.tolist(), "sin": self.sin_coeffs.tolist()}

    def __eq__(self, other):
        if not isinstance(other, TrigCurve):
            return NotImplemented
        return (
            self.cos_coeffs.shape == other.cos_coeffs.shape
            and np.array_equal(self.cos_coeffs, other.cos_coeffs)
            and np.array_equal(self.sin_coeffs, other.sin_coeffs)
        )

    __hash__ = None


def circle(center, e1, e2, radius=1.0):
    """Circle ``center + radius (cos t e1 + sin t e2)``."""
    e1 = radius * np.asarray(e1, dtype=float)
    e2 = radius * np.asarray(e2, dtype=float)
    return TrigCurve([center, e1], [[0.0, 0.0, 0.0], e2])


@dataclass(frozen=True)
class Link3:
    """Ordered, oriented three-component link with components X, Y, Z."""

    cx: TrigCurve
    cy: TrigCurve
    cz: TrigCurve

    @property
    def components(self):
        return (self.cx, self.cy, self.cz)

    def check_disjoint(self, eps=DISJOINT_EPS, samples=PROBE_SAMPLES):
        """Raise DisjointnessViolation if two components come within eps."""
        th = angles(samples)
        pts = [c.eval(th) for c in self.components]
        for i, j in ((1, 2), (2, 0), (0, 1)):
            d = np.linalg.norm(pts[i][:, None, :] - pts[j][None, :, :], axis=-1)
            k = np.unravel_index(np.argmin(d), d.shape)
            if d[k] <= eps:
                pair = (COMPONENT_NAMES[i], COMPONENT_NAMES[j])
                params = (float(th[k[0]]), float(th[k[1]]))
                raise DisjointnessViolation(
                    f"components {pair[0]} and {pair[1]} come within "
                    f"{d[k]:.3g} at parameters {params[0]:.6f}, {params[1]:.6f}",
                    pair=pair,
                    params=params,
                    distance=float(d[k]),
                )
        return self

    def to_dict(self):
        return {"components": [c.to_dict() for c in self.components]}

    def permuted(self, order):
        """Reorder components, e.g. ``(1, 0, 2)`` swaps X and Y."""
        comps = self.components
        return Link3(*(comps[i] for i in order))


# -- presets -----------------------------------------------------------------

def _borromean():
    return Link3(
        TrigCurve([[0, 0, 0], [2, 0, 0]], [[0, 0, 0], [0, 7, 0]]),
        TrigCurve([[0, 0, 0], [0, 2, 0]], [[0, 0, 0], [0, 0, 7]]),
        TrigCurve([[0, 0, 0], [0, 0, 2]], [[0, 0, 0], [7, 0, 0]]),
    )


def _split_unlink():
    e1, e2 = (1, 0, 0), (0, 1, 0)
    return Link3(
        circle((0, 0, 0), e1, e2),
        circle((10, 0, 0), e1, e2),
        circle((20, 0, 0), e1, e2),
    )


def _borromean_reversed():
    b = _borromean()
    return Link3(b.cx.reversed(), b.cy, b.cz)


PRESETS = {
    "borromean": _borromean,
    "split-unlink": _split_unlink,
    "borromean-reversed": _borromean_reversed,
}


def preset(name):
    try:
        return PRESETS[name]()
    except KeyError:
        raise UnknownPreset(
            f"unknown preset {name!r}; choose from {', '.join(PRESETS)}"
        ) from None


# -- config documents --------------------------------------------------------

def dumps_link(link):
    return json.dumps(link.to_dict(), indent=2)


def _parse_triples(value, where):
    if not isinstance(value, list):
        raise ParseError("expected a list of [x, y, z] triples", where)
    out = []
    for i, row in enumerate(value):
        loc = f"{where}[{i}]"
        if not isinstance(row, list) or len(row) != 3:
            raise ParseError("expected a triple [x, y, z]", loc)
        for v in row:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ParseError(f"not a number: {v!r}", loc)
            if not math.isfinite(v):
                raise ParseError(f"non-finite coefficient {v!r}", loc)
        out.append([float(v) for v in row])
    return out


def _parse_component(obj, where):
    if not isinstance(obj, dict):
        raise ParseError("component must be an object with 'cos' and 'sin'", where)
    missing = {"cos", "sin"} - obj.keys()
    if missing:
        raise ParseError(f"missing key(s) {sorted(missing)}", where)
    cos = _parse_triples(obj["cos"], f"{where}.cos")
    sin = _parse_triples(obj["sin"], f"{where}.sin")
    if not cos and not sin:
        raise ParseError("component has no coefficients", where)
    return TrigCurve(cos or [[0, 0, 0]], sin or [[0, 0, 0]])


def load_link(document, eps=DISJOINT_EPS):
    """Parse a JSON link document and check that its components are disjoint.

    The document is either ``{"components": [c0, c1, c2]}`` or an object
    with keys ``x``, ``y``, ``z``; each component is
    ``{"cos": [[x, y, z], ...], "sin": [[x, y, z], ...]}`` indexed by
    harmonic.
    """
    def reject_constant(token):
        raise ValueError(f"invalid number {token}")

    try:
        data = json.loads(document, parse_constant=reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    except ValueError as exc:
        raise ParseError(str(exc), "document") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "document")
    if "components" in data:
        comps = data["components"]
        if not isinstance(comps, list) or len(comps) != 3:
            raise ParseError("expected exactly three components", "components")
        curves = [_parse_component(c, f"components[{i}]") for i, c in enumerate(comps)]
    elif all(k in data for k in COMPONENT_NAMES):
        curves = [_parse_component(data[k], k) for k in COMPONENT_NAMES]
    else:
        raise ParseError("expected 'components' or keys 'x', 'y', 'z'", "document")
    return Link3(*curves).check_disjoint(eps)


def load_link_file(path, eps=DISJOINT_EPS):
    with open(path, encoding="utf-8") as fh:
        return load_link(fh.read(), eps)


# -- isometries --------------------------------------------------------------

def transform_link(link, rotation=None, translation=None, scale=1.0):
    """Apply ``p -> scale * R p + v`` to every component.

    The translation lands on the constant (k = 0) cosine coefficient only.
    """
    R = np.eye(3) if rotation is None else np.asarray(rotation, dtype=float)
    v = np.zeros(3) if translation is None else np.asarray(translation, dtype=float)
    if R.shape != (3, 3):
        raise NotARotation(f"rotation must be 3x3, got shape {R.shape}")
    if not np.allclose(R.T @ R, np.eye(3), rtol=0, atol=1e-9) or abs(np.linalg.det(R) - 1) > 1e-9:
        raise NotARotation("matrix is not orthogonal with determinant +1")
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    M = scale * R

    def move(curve):
        c = curve.cos_coeffs @ M.T
        c[0] += v
        return TrigCurve(c, curve.sin_coeffs @ M.T)

    return Link3(*(move(c) for c in link.components))


def random_rotation(rng):
    """Uniformly random element of SO(3)."""
    q = rng.normal(size=4)
    w, x, y, z = q / np.linalg.norm(q)
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])
