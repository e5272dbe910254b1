"""Benchmark boundary curves with closed-form derivative jets.

Curves are evaluated through small forward-mode "jets" that carry a value and
its first three parameter derivatives, so every curve is differentiated by
Taylor arithmetic of its defining formula rather than by hand or by finite
differences.  The graded corner mesh is the substitution t = w(s); composing
a curve with w is free in jet form (the w jet is simply fed in as the
parameter jet).

A jet is an ndarray of shape (4,) + base_shape holding [f, f', f'', f'''].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

TWO_PI = 2.0 * np.pi

CURVE_KINDS = ("apple", "peanut", "peach", "drop", "heart", "circle", "custom")
CORNER_KINDS = ("drop", "heart")


# ---------------------------------------------------------------------------
# jet arithmetic


def jet_var(t):
    """The identity jet: value t, first derivative 1."""
    t = np.asarray(t, dtype=float)
    out = np.zeros((4,) + t.shape)
    out[0] = t
    out[1] = 1.0
    return out


def jet_const(c, like):
    out = np.zeros_like(like)
    out[0] = c
    return out


def jet_mul(a, b):
    c = np.empty_like(a)
    c[0] = a[0] * b[0]
    c[1] = a[1] * b[0] + a[0] * b[1]
    c[2] = a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2]
    c[3] = a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3]
    return c


def jet_div(a, b):
    # solve b*c = a order by order
    c = np.empty_like(a)
    c[0] = a[0] / b[0]
    c[1] = (a[1] - c[0] * b[1]) / b[0]
    c[2] = (a[2] - c[0] * b[2] - 2.0 * c[1] * b[1]) / b[0]
    c[3] = (a[3] - c[0] * b[3] - 3.0 * c[1] * b[2] - 3.0 * c[2] * b[1]) / b[0]
    return c


def _compose(f0, f1, f2, f3, a):
    """Chain rule for g = f(a) given derivatives of f at a[0]."""
    g = np.empty_like(a)
    g[0] = f0
    g[1] = f1 * a[1]
    g[2] = f2 * a[1] ** 2 + f1 * a[2]
    g[3] = f3 * a[1] ** 3 + 3.0 * f2 * a[1] * a[2] + f1 * a[3]
    return g


def jet_sin(a):
    s, c = np.sin(a[0]), np.cos(a[0])
    return _compose(s, c, -s, -c, a)


def jet_cos(a):
    s, c = np.sin(a[0]), np.cos(a[0])
    return _compose(c, -s, -c, s, a)


def jet_sqrt(a, floor=0.0):
    """Square-root jet; a[0] is clamped below by `floor` for curves that
    touch zero (peach at t = pi/2, where the vanishing cos^2 prefactor keeps
    the curve itself finite)."""
    u = np.maximum(a[0], floor)
    r = np.sqrt(u)
    return _compose(r, 0.5 / r, -0.25 / (u * r), 0.375 / (u * u * r), a)


def jet_pow(a, p):
    """a**p for real p >= 2 (the graded-mesh exponent)."""
    u = a[0]
    f = [np.power(u, p)]
    coef = 1.0
    for k in range(1, 4):
        coef *= p - (k - 1)
        if coef == 0.0:
            f.append(np.zeros_like(u))
        else:
            f.append(coef * np.power(u, p - k))
    return _compose(f[0], f[1], f[2], f[3], a)


def jet_scale(a, c):
    return c * a


def jet_shift(a, c):
    out = a.copy()
    out[0] = out[0] + c
    return out


# ---------------------------------------------------------------------------
# curve catalogue


def _radial(rjet, tjet):
    return jet_mul(rjet, jet_cos(tjet)), jet_mul(rjet, jet_sin(tjet))


def _apple(tjet):
    ct, st = jet_cos(tjet), jet_sin(tjet)
    s2t = jet_sin(jet_scale(tjet, 2.0))
    num = jet_shift(jet_scale(ct, 0.9) + jet_scale(s2t, 0.1), 1.0)
    den = jet_shift(jet_scale(ct, 0.75), 1.0)
    r = jet_scale(jet_div(num, den), 0.55)
    return jet_mul(r, ct), jet_mul(r, st)


def _peanut(tjet):
    ct, st = jet_cos(tjet), jet_sin(tjet)
    u = jet_shift(jet_scale(jet_mul(ct, ct), 3.0), 1.0)
    r = jet_scale(jet_sqrt(u), 0.275)
    return jet_mul(r, ct), jet_mul(r, st)


def _peach(tjet):
    ct, st = jet_cos(tjet), jet_sin(tjet)
    u = jet_shift(jet_scale(st, -1.0), 1.0)
    # 1 - sin t vanishes quadratically at t = pi/2; the cos^2 prefactor keeps
    # the curve C^2 there, and the sqrt jet only needs a tiny positive floor
    r = jet_shift(jet_mul(jet_mul(ct, ct), jet_sqrt(u, floor=1e-30)), 2.0)
    r = jet_scale(r, 0.22)
    return jet_mul(r, ct), jet_mul(r, st)


def _drop(tjet):
    x = jet_shift(jet_scale(jet_sin(jet_scale(tjet, 0.5)), 2.0), -1.0)
    y = jet_scale(jet_sin(tjet), -1.0)
    return x, y


def _heart(tjet):
    x = jet_scale(jet_sin(jet_scale(tjet, 1.5)), 1.5)
    y = jet_sin(tjet)
    return x, y


_CURVE_FUNCS = {
    "apple": _apple,
    "peanut": _peanut,
    "peach": _peach,
    "drop": _drop,
    "heart": _heart,
}


@dataclass(frozen=True)
class BoundaryCurve:
    """A closed 2pi-periodic boundary curve, optionally corner-graded.

    kind is one of CURVE_KINDS; circle takes a radius; custom takes a
    user-supplied jet map (tjet -> (xjet, yjet)) built from this module's jet
    operations.  graded_p, when set, composes the curve with the corner
    clustering map w(s) and requires shifted collocation nodes.
    """

    kind: str
    radius: float = 1.0
    graded_p: Optional[float] = None
    jet_map: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if self.kind == "circle" and self.radius <= 0:
            raise ValueError("circle radius must be positive")
        if self.kind == "custom" and self.jet_map is None:
            raise ValueError("custom curve requires a jet_map")
        if self.graded_p is not None and self.graded_p < 2:
            raise ValueError("graded exponent p must be >= 2")

    @property
    def graded(self) -> bool:
        return self.graded_p is not None

    def coordinate_jets(self, tjet):
        if self.kind == "circle":
            return jet_scale(jet_cos(tjet), self.radius), jet_scale(jet_sin(tjet), self.radius)
        if self.kind == "custom":
            return self.jet_map(tjet)
        return _CURVE_FUNCS[self.kind](tjet)


@dataclass(frozen=True)
class CurveJet:
    """Curve data at one parameter value: gamma and three derivatives, the
    unnormalized normal n = (gamma2', -gamma1'), and the speed |gamma'|."""

    point: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    d3: np.ndarray
    normal: np.ndarray
    speed: float


@dataclass(frozen=True)
class JetTable:
    """Vectorized curve jets at m parameter values; arrays of shape (m, 2)
    except speed of shape (m,)."""

    t: np.ndarray
    point: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    d3: np.ndarray
    normal: np.ndarray
    speed: np.ndarray


def graded_map(s, p):
    """Corner clustering substitution w(s) with three derivatives.

    w(s) = 2pi v(s)^p / (v(s)^p + v(2pi - s)^p),
    v(s) = (1/p - 1/2)((pi - s)/pi)^3 + (1/p)(s - pi)/pi + 1/2.

    Returns a jet array [w, w', w'', w'''] matching the shape of s.
    """
    if p < 2:
        raise ValueError("graded exponent p must be >= 2")
    s = np.asarray(s, dtype=float)
    if np.any(s < 0) or np.any(s > TWO_PI):
        raise ValueError("graded parameter s must lie in [0, 2pi]")
    sj = jet_var(s)

    def v(a):
        cub = jet_scale(jet_shift(jet_scale(a, -1.0 / np.pi), 1.0), 1.0)  # (pi - s)/pi
        term1 = jet_scale(jet_mul(jet_mul(cub, cub), cub), 1.0 / p - 0.5)
        term2 = jet_scale(jet_shift(jet_scale(a, 1.0 / np.pi), -1.0), 1.0 / p)
        return jet_shift(term1 + term2, 0.5)

    # jet of the reflected argument 2pi - s
    sref = jet_scale(sj, -1.0)
    sref[0] += TWO_PI
    a = jet_pow(v(sj), p)
    b = jet_pow(v(sref), p)
    return jet_scale(jet_div(a, a + b), TWO_PI)


def _parameter_jet(curve: BoundaryCurve, t):
    if curve.graded:
        return graded_map(t, curve.graded_p)
    return jet_var(t)


def _corner_hit(curve: BoundaryCurve, t):
    if curve.kind not in CORNER_KINDS or curve.graded:
        return np.zeros(np.shape(t), dtype=bool)
    r = np.mod(np.asarray(t, dtype=float), TWO_PI)
    return np.minimum(r, TWO_PI - r) < 1e-12


def jet_table(curve: BoundaryCurve, t) -> JetTable:
    """Vectorized curve jets at parameter values t (mesh parameter s for
    graded curves)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if not np.all(np.isfinite(t)):
        raise ValueError("parameter values must be finite")
    if np.any(_corner_hit(curve, t)):
        raise ValueError(f"{curve.kind} has a corner at t = 0 mod 2pi; derivative jets are undefined there")
    xj, yj = curve.coordinate_jets(_parameter_jet(curve, t))
    point = np.stack([xj[0], yj[0]], axis=-1)
    d1 = np.stack([xj[1], yj[1]], axis=-1)
    d2 = np.stack([xj[2], yj[2]], axis=-1)
    d3 = np.stack([xj[3], yj[3]], axis=-1)
    normal = np.stack([yj[1], -xj[1]], axis=-1)
    speed = np.hypot(xj[1], yj[1])
    return JetTable(t=t, point=point, d1=d1, d2=d2, d3=d3, normal=normal, speed=speed)


def curve_jet(curve: BoundaryCurve, t: float) -> CurveJet:
    tab = jet_table(curve, float(t))
    return CurveJet(
        point=tab.point[0],
        d1=tab.d1[0],
        d2=tab.d2[0],
        d3=tab.d3[0],
        normal=tab.normal[0],
        speed=float(tab.speed[0]),
    )


def curve_point(curve: BoundaryCurve, t):
    """Position only (valid at corners too)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    xj, yj = curve.coordinate_jets(_parameter_jet(curve, t))
    return np.stack([xj[0], yj[0]], axis=-1)


@dataclass(frozen=True)
class Discretization:
    """2n equispaced collocation nodes with step pi/n, optionally shifted by
    pi/(2n) off the corner parameter."""

    n: int
    nodes: np.ndarray
    shifted: bool


def collocation_nodes(n: int, shifted: bool = False) -> Discretization:
    if n < 4:
        raise ValueError("n must be >= 4 (weight formulas contain 1/(n^2 - 4))")
    nodes = np.pi * np.arange(2 * n) / n
    if shifted:
        nodes = nodes + np.pi / (2 * n)
    return Discretization(n=int(n), nodes=nodes, shifted=bool(shifted))


def winding_number(curve: BoundaryCurve, point, samples: int = 720) -> int:
    """Winding number of the curve around a point (1 = inside for the
    counterclockwise catalogue curves)."""
    t = TWO_PI * np.arange(samples) / samples
    if curve.kind in CORNER_KINDS and not curve.graded:
        t = t + TWO_PI / (2 * samples)
    g = curve_point(curve, t) - np.asarray(point, dtype=float)
    ang = np.arctan2(g[:, 1], g[:, 0])
    dang = np.diff(np.concatenate([ang, ang[:1]]))
    dang = np.mod(dang + np.pi, TWO_PI) - np.pi
    return int(np.round(dang.sum() / TWO_PI))
