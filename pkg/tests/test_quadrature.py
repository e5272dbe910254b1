"""Quadrature weights: eigenrelations, row sums, and the gap identity."""

import numpy as np
import pytest

from biharmbem.geometry import collocation_nodes
from biharmbem.quadrature import (
    sin2_weight_gap_closed,
    sin2_weight_gap,
    trapezoid,
    weight_table,
    weights,
)


def test_trapezoid_basics():
    assert abs(trapezoid(np.ones(16)) - 2.0 * np.pi) < 1e-14
    z = np.pi * np.arange(16) / 8
    assert abs(trapezoid(np.cos(3 * z))) < 1e-14
    # spectral self-convergence on an analytic periodic integrand
    z16 = np.pi * np.arange(32) / 16
    z32 = np.pi * np.arange(64) / 32
    a = trapezoid(np.exp(np.sin(z16)))
    b = trapezoid(np.exp(np.sin(z32)))
    assert abs(a - b) < 1e-14
    with pytest.raises(ValueError):
        trapezoid(np.ones(7))


@pytest.mark.parametrize("n", [8, 16, 32])
def test_r_eigenrelation(n):
    # R applied to cos(m zeta), scaled by -1/(2 pi), returns cos(m t)/m
    zeta = np.pi * np.arange(2 * n) / n
    for t in (0.0, 0.37, np.pi / (2 * n)):
        w = weights("R", n, t)
        for m in (1, 2, n // 2, n - 1):
            got = (-1.0 / (2.0 * np.pi)) * (w * np.cos(m * zeta)).sum()
            assert abs(got - np.cos(m * t) / m) < 1e-12


@pytest.mark.parametrize("n", [8, 16, 32])
def test_t_eigenrelation(n):
    # T applied to e^{i m zeta} returns -m e^{i m t}
    zeta = np.pi * np.arange(2 * n) / n
    for t in (0.0, 0.37):
        w = weights("T", n, t)
        for m in (1, 3, n - 1):
            got = (w * np.exp(1j * m * zeta)).sum()
            assert abs(got + m * np.exp(1j * m * t)) < 1e-12 * max(1, m)


@pytest.mark.parametrize("n", [8, 16, 32])
@pytest.mark.parametrize("family,target", [("R", 0.0), ("T", 0.0), ("V", 0.0), ("W", np.pi / 2)])
def test_row_sums(n, family, target):
    # on-grid nodes and off-grid (shifted) points
    for t in (0.0, np.pi / n, 0.4123, np.pi / (2 * n)):
        assert abs(weights(family, n, t).sum() - target) < 1e-12


def test_v_of_constant_vanishes():
    # int ln(4 sin^2(theta/2)) sin(theta) dtheta = 0 by parity
    for n in (8, 16):
        assert abs(weights("V", n, 0.9).sum()) < 1e-13


@pytest.mark.parametrize("n", [8, 16])
def test_v_eigenrelation(n):
    # V applied to cos(m zeta) approximates the sin-weighted log integral
    # int ln(4 sin^2((t-z)/2)) sin(t-z) cos(m z) dz.  With the Fourier
    # series ln(4 sin^2(theta/2)) = -2 sum cos(m theta)/m the exact value
    # is -2 pi sin(m t)/(m^2 - 1) for m >= 2
    zeta = np.pi * np.arange(2 * n) / n
    t = 0.77
    wv = weights("V", n, t)
    for m in (2, 3, n - 2):
        got = (wv * np.cos(m * zeta)).sum()
        ref = -2.0 * np.pi * np.sin(m * t) / (m**2 - 1)
        assert abs(got - ref) < 1e-11


def test_w_eigenrelation():
    # same Fourier computation for the sin^2-weighted log integral:
    # m = 0 -> pi/2, m = 1 -> -(pi/3) cos t, m = 4 -> (pi/12) cos 4t
    n = 16
    zeta = np.pi * np.arange(2 * n) / n
    t = 0.31
    ww = weights("W", n, t)
    refs = {0: np.pi / 2, 1: -(np.pi / 3) * np.cos(t), 4: (np.pi / 12) * np.cos(4 * t)}
    for m, ref in refs.items():
        got = (ww * np.cos(m * zeta)).sum()
        assert abs(got - ref) < 1e-11


def test_translation_covariance():
    n = 12
    for fam in ("R", "T", "V", "W"):
        w0 = weights(fam, n, 0.2)
        w1 = weights(fam, n, 0.2 + np.pi / n)
        assert np.abs(np.roll(w0, 1) - w1).max() < 1e-12


def test_weight_table_matches_pointwise_and_caches():
    grid = collocation_nodes(8)
    for fam in ("R", "T", "V", "W"):
        tab = weight_table(fam, grid)
        assert tab.values.shape == (16, 16)
        for i in (0, 5, 11):
            assert np.abs(tab.values[i] - weights(fam, 8, grid.nodes[i])).max() < 1e-12
        again = weight_table(fam, grid)
        assert again.values is tab.values
        with pytest.raises(ValueError):
            tab.values[0, 0] = 1.0


def test_sin2_weight_gap_identity():
    for (i, j) in [(1, 3), (0, 0), (5, 12), (2, 2)]:
        assert abs(sin2_weight_gap(8, i, j) - sin2_weight_gap_closed(8, i, j)) < 1e-13


def test_sin2_weight_gap_decreases():
    def max_gap(n):
        return max(abs(sin2_weight_gap(n, i, j)) for i in range(2 * n) for j in range(0, 2 * n, max(1, n // 4)))

    assert max_gap(64) < max_gap(8)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        weights("R", 3, 0.0)
    with pytest.raises(ValueError):
        weights("Q", 8, 0.0)
    with pytest.raises(ValueError):
        sin2_weight_gap(8, 16, 0)
