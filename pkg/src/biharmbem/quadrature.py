"""Periodic trapezoid rule and trigonometric-interpolation quadrature weights.

Four weight families on the 2n-point periodic grid zeta_j = pi j / n:

  R  approximates  int ln(4 sin^2((t - zeta)/2)) f(zeta) dzeta
  T  approximates  (1/2pi) int cot((zeta - t)/2) f'(zeta) dzeta
  V  approximates  int ln(4 sin^2((t - zeta)/2)) sin(t - zeta) f(zeta) dzeta
  W  approximates  int ln(4 sin^2((t - zeta)/2)) sin^2(t - zeta) f(zeta) dzeta

Each weight depends only on the difference t - zeta_j, so full grid tables
are circulant and are built from 2n distinct evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Discretization

FAMILIES = ("R", "T", "V", "W")

_table_cache: dict = {}


def trapezoid(samples) -> complex:
    """Periodic trapezoid rule (pi/n) * sum over the 2n samples."""
    samples = np.asarray(samples)
    if samples.shape[-1] % 2:
        raise ValueError("expected 2n samples")
    n = samples.shape[-1] // 2
    return (np.pi / n) * samples.sum(axis=-1)


def _check_n(n):
    if n < 4:
        raise ValueError("n must be >= 4 (weight formulas contain 1/(n^2 - 4))")


def _weight_of_delta(family: str, n: int, delta):
    """Weight as a function of delta = t - zeta_j; vectorized over delta."""
    d = np.asarray(delta, dtype=float)[..., None]
    if family == "R":
        m = np.arange(1, n)
        return (-2.0 * np.pi / n) * (np.cos(m * d) / m).sum(-1) - (np.pi / n**2) * np.cos(n * np.squeeze(d, -1))
    if family == "T":
        m = np.arange(1, n)
        return (-1.0 / n) * (m * np.cos(m * d)).sum(-1) - 0.5 * np.cos(n * np.squeeze(d, -1))
    if family == "V":
        # stated in terms of zeta_j - t = -delta
        m = np.arange(2, n)
        s = (np.sin(-m * d) / (m**2 - 1)).sum(-1)
        d0 = np.squeeze(d, -1)
        return (
            (np.pi / (2 * n)) * np.sin(d0)
            + (2.0 * np.pi / n) * s
            - np.pi * np.sin(n * d0) / (n * (n**2 - 1))
        )
    if family == "W":
        m = np.arange(3, n)
        s = (m / (m**2 - 4.0) * np.cos(m * d)).sum(-1) if n > 3 else 0.0
        d0 = np.squeeze(d, -1)
        return (
            (np.pi / n) * (0.25 + (2.0 / 3.0) * np.cos(d0) + 0.125 * np.cos(2 * d0))
            + 0.5 * _weight_of_delta("R", n, d0)
            + (np.pi / n) * s
            + (np.pi / (2.0 * (n**2 - 4.0))) * np.cos(n * d0)
        )
    raise ValueError(f"unknown weight family {family!r}")


def weights(family: str, n: int, t: float):
    """The 2n weights of the given family evaluated at collocation point t."""
    _check_n(n)
    zeta = np.pi * np.arange(2 * n) / n
    return _weight_of_delta(family, n, float(t) - zeta)


@dataclass(frozen=True)
class WeightTable:
    """Full 2n x 2n weight matrix; entry (i, j) is weight_j at node t_i."""

    family: str
    n: int
    values: np.ndarray


def weight_table(family: str, grid: Discretization) -> WeightTable:
    """Grid table for one quadrature grid; node differences t_i - t_j are
    pi (i - j)/n regardless of the shift, so the table is circulant and
    cacheable per (family, n)."""
    _check_n(grid.n)
    n = grid.n
    key = (family, n)
    vals = _table_cache.get(key)
    if vals is None:
        col = _weight_of_delta(family, n, np.pi * np.arange(2 * n) / n)
        idx = (np.arange(2 * n)[:, None] - np.arange(2 * n)[None, :]) % (2 * n)
        vals = col[idx]
        vals.setflags(write=False)
        _table_cache[key] = vals
    return WeightTable(family=family, n=n, values=vals)


def sin2_weight_gap(n: int, i: int, j: int) -> float:
    """Direct value of W_j(zeta_i) - R_j(zeta_i) sin^2(zeta_i - zeta_j)."""
    _check_n(n)
    if not (0 <= i < 2 * n and 0 <= j < 2 * n):
        raise ValueError("node indices must lie in [0, 2n)")
    d = np.pi * (i - j) / n
    return float(_weight_of_delta("W", n, d) - _weight_of_delta("R", n, d) * np.sin(d) ** 2)


def sin2_weight_gap_closed(n: int, i: int, j: int) -> float:
    """Four-term closed form of the same gap, as an independent diagnostic."""
    _check_n(n)
    d = np.pi * (i - j) / n
    return float(
        (np.pi / (2 * n**2)) * np.sin(n * d) * np.sin(2 * d)
        + (np.pi / (n**2 - n)) * np.sin(n * d) * np.sin(d)
        - (np.pi / (n * (n - 1) * (n + 1))) * np.cos((n - 1) * d)
        - (np.pi / (n * (n - 2) * (n + 2))) * np.cos(n * d)
    )
