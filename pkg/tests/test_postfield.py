"""Exterior fields, far-field patterns, and circle norms."""

import numpy as np
import pytest

from biharmbem import specfun as sf
from biharmbem.assembly import DensityPair, PointSource, PlaneWave, assemble, solve
from biharmbem.geometry import BoundaryCurve, collocation_nodes
from biharmbem.postfield import (
    circle_points,
    eval_field,
    eval_fields,
    far_field,
    l2_error_on_circle,
)

APPLE = BoundaryCurve("apple")
KAPPA = 2.0


def _solved(formulation="SingleSingle", n=64, incident=None):
    grid = collocation_nodes(n)
    if incident is None:
        incident = PointSource(kappa=KAPPA, source=(0.1, 0.2))
    system = assemble(formulation, APPLE, grid, KAPPA, incident=incident)
    return solve(system), grid


def _exact(points):
    src = np.array([0.1, 0.2])
    r = np.sqrt(((points - src) ** 2).sum(axis=1))
    return sf.hankel1(0, KAPPA * r), (-2j / np.pi) * sf.bessel_k0(KAPPA * r)


def test_zero_densities_give_zero_field():
    grid = collocation_nodes(8)
    zero = DensityPair(psi1=np.zeros(16, complex), psi2=np.zeros(16, complex))
    s = eval_field(zero, "SingleSingle", APPLE, grid, KAPPA, (2.0, 0.5))
    assert s.vH == 0 and s.vM == 0 and s.v == 0
    ff = far_field(zero, "SingleSingle", APPLE, grid, KAPPA, np.linspace(0, 6, 8))
    assert np.abs(ff.values).max() == 0.0


def test_field_sample_sum_invariant():
    dens, grid = _solved()
    s = eval_field(dens, "SingleSingle", APPLE, grid, KAPPA, (1.5, 0.3))
    assert s.v == s.vH + s.vM


def test_manufactured_field_accuracy():
    dens, grid = _solved(n=64)
    pts = circle_points(1.0, 256)
    vh, vm = eval_fields(dens, "SingleSingle", APPLE, grid, KAPPA, pts)
    eh, em = _exact(pts)
    assert np.abs(vh - eh).max() <= 1e-10
    assert np.abs(vm - em).max() <= 1e-10


def test_vectorized_matches_scalar():
    dens, grid = _solved(n=16)
    pts = np.array([[1.5, 0.2], [-1.1, 0.9]])
    vh, vm = eval_fields(dens, "SingleSingle", APPLE, grid, KAPPA, pts)
    for i, p in enumerate(pts):
        s = eval_field(dens, "SingleSingle", APPLE, grid, KAPPA, p)
        assert abs(vh[i] - s.vH) < 1e-14
        assert abs(vm[i] - s.vM) < 1e-14


def test_interior_and_near_boundary_rejected():
    dens, grid = _solved(n=16)
    with pytest.raises(ValueError):
        eval_field(dens, "SingleSingle", APPLE, grid, KAPPA, (0.0, 0.0))
    # a point just off the boundary (apple passes near (0.597, 0))
    with pytest.raises(ValueError):
        eval_field(dens, "SingleSingle", APPLE, grid, KAPPA, (0.62, 0.0))


def test_far_field_constant_magnitude():
    dens, grid = _solved(n=32, incident=PlaneWave(kappa=KAPPA, theta=np.pi / 6))
    ff = far_field(dens, "SingleSingle", APPLE, grid, KAPPA, np.zeros(1))
    assert abs(abs(ff.rho) - 1.0 / np.sqrt(16.0 * np.pi)) < 1e-14
    assert abs(abs(ff.rho) - 0.14104739) < 1e-7


def test_field_linearity():
    dens, grid = _solved(n=16)
    c = 1.5 - 0.5j
    scaled = DensityPair(psi1=c * dens.psi1, psi2=c * dens.psi2)
    p = (2.0, 1.0)
    a = eval_field(dens, "SingleSingle", APPLE, grid, KAPPA, p)
    b = eval_field(scaled, "SingleSingle", APPLE, grid, KAPPA, p)
    assert abs(b.vH - c * a.vH) < 1e-13 * abs(c * a.vH)
    assert abs(b.vM - c * a.vM) < 1e-12 * max(abs(c * a.vM), 1e-30)


def test_helmholtz_radiates_modified_decays():
    dens, grid = _solved(n=32, incident=PlaneWave(kappa=KAPPA, theta=0.0))
    xhat = np.array([np.cos(0.4), np.sin(0.4)])
    mags = []
    for R in (5.0, 10.0, 20.0):
        s = eval_field(dens, "SingleSingle", APPLE, grid, KAPPA, R * xhat)
        mags.append(abs(s.vH) * np.sqrt(R))
        if R >= 10.0:
            assert abs(s.vM) < 1e-8
    mags = np.array(mags)
    assert mags.max() / mags.min() < 1.2
    # vM drops by at least the exponential factor between R = 2 and R = 4
    s2 = eval_field(dens, "SingleSingle", APPLE, grid, KAPPA, 2.0 * xhat)
    s4 = eval_field(dens, "SingleSingle", APPLE, grid, KAPPA, 4.0 * xhat)
    assert abs(s4.vM) / abs(s2.vM) <= np.exp(-KAPPA * 1.5)


def test_circle_points_and_l2_norm():
    pts = circle_points(2.0, 128)
    assert pts.shape == (128, 2)
    assert np.abs(np.hypot(pts[:, 0], pts[:, 1]) - 2.0).max() < 1e-14
    a = np.zeros(256, complex)
    b = np.full(256, 1.0 + 1.0j)
    # constant difference c integrates to |c| sqrt(2 pi R)
    got = l2_error_on_circle(a, b, 1.0, 256)
    assert abs(got - np.sqrt(2.0) * np.sqrt(2.0 * np.pi)) < 1e-13
    assert l2_error_on_circle(b, b, 1.0, 256) == 0.0
    with pytest.raises(ValueError):
        l2_error_on_circle(a[:32], b[:32], 1.0, 32)
    with pytest.raises(ValueError):
        l2_error_on_circle(a, b, 1.0, 128)


def test_l2_error_sample_doubling_stable():
    dens, grid = _solved(n=64)
    errs = []
    for m in (256, 512):
        pts = circle_points(1.0, m)
        vh, _ = eval_fields(dens, "SingleSingle", APPLE, grid, KAPPA, pts)
        eh, _ = _exact(pts)
        errs.append(l2_error_on_circle(vh, eh, 1.0, m))
    assert abs(errs[0] - errs[1]) <= 1e-12


def test_formulation_validation():
    dens, grid = _solved(n=8)
    with pytest.raises(ValueError):
        eval_field(dens, "Nope", APPLE, grid, KAPPA, (2.0, 0.0))
    with pytest.raises(ValueError):
        far_field(dens, "Nope", APPLE, grid, KAPPA, np.zeros(4))
