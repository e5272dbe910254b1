"""System assembly and the dense solve."""

import numpy as np
import pytest

from biharmbem import specfun as sf
from biharmbem.assembly import (
    FORMULATIONS,
    LinearSystem,
    PlaneWave,
    PointSource,
    assemble,
    rhs_from_incident,
    solve,
    with_rhs,
)
from biharmbem.geometry import BoundaryCurve, collocation_nodes

CIRCLE = BoundaryCurve("circle", radius=1.0)
APPLE = BoundaryCurve("apple")


def test_plane_wave_rhs_on_circle():
    # at t = 0 the unit circle has gamma = (1, 0) and n = (1, 0), so with
    # theta = 0: eta1 = -2 e^{i kappa}, eta2 = -2 i kappa e^{i kappa}
    grid = collocation_nodes(8)
    kappa = 2.0
    rhs = rhs_from_incident(PlaneWave(kappa=kappa, theta=0.0), CIRCLE, grid)
    m = 16
    assert abs(rhs[0] - (-2.0 * np.exp(1j * kappa))) < 1e-13
    assert abs(rhs[m] - (-2j * kappa * np.exp(1j * kappa))) < 1e-13
    # |eta1| = 2 everywhere for a plane wave
    assert np.abs(np.abs(rhs[:m]) - 2.0).max() < 1e-13


def test_point_source_rhs_on_circle():
    grid = collocation_nodes(8)
    kappa = 2.0
    rhs = rhs_from_incident(PointSource(kappa=kappa, source=(0.1, 0.2)), CIRCLE, grid)
    # node index 4 is t = pi/2, gamma = (0, 1)
    r = np.hypot(0.0 - 0.1, 1.0 - 0.2)
    expected = 2.0 * (sf.hankel1(0, kappa * r) - (2j / np.pi) * sf.bessel_k0(kappa * r))
    assert abs(rhs[4] - expected) < 1e-13


def test_point_source_must_be_interior():
    grid = collocation_nodes(8)
    with pytest.raises(ValueError):
        rhs_from_incident(PointSource(kappa=2.0, source=(3.0, 0.0)), CIRCLE, grid)


def test_incident_validation():
    with pytest.raises(ValueError):
        PlaneWave(kappa=0.0, theta=0.1)
    with pytest.raises(ValueError):
        PointSource(kappa=-1.0, source=(0.0, 0.0))


@pytest.mark.parametrize("formulation", FORMULATIONS)
def test_assemble_shape_and_finite(formulation):
    grid = collocation_nodes(8)
    system = assemble(formulation, APPLE, grid, 2.0)
    assert system.matrix.shape == (32, 32)
    assert np.all(np.isfinite(system.matrix))
    assert system.rhs is None


def test_assemble_rejects_bad_inputs():
    grid = collocation_nodes(8)
    with pytest.raises(ValueError):
        assemble("Direct", APPLE, grid, 2.0)
    with pytest.raises(ValueError):
        assemble("SingleSingle", APPLE, grid, 0.0)
    heart = BoundaryCurve("heart", graded_p=2.0)
    with pytest.raises(ValueError):
        assemble("SingleSingle", heart, collocation_nodes(8, shifted=False), 2.0)
    with pytest.raises(ValueError):
        assemble("SingleSingle", APPLE, collocation_nodes(8, shifted=True), 2.0)


def test_circle_blocks_are_circulant():
    grid = collocation_nodes(8)
    m = 16
    for formulation in FORMULATIONS:
        a = assemble(formulation, CIRCLE, grid, 2.0).matrix
        for bi in (0, 1):
            for bj in (0, 1):
                blk = a[bi * m:(bi + 1) * m, bj * m:(bj + 1) * m]
                rolled = np.roll(np.roll(blk, 1, axis=0), 1, axis=1)
                assert np.abs(blk - rolled).max() < 1e-12


def test_identity_solve():
    grid = collocation_nodes(4)
    eye = np.eye(16, dtype=complex)
    rhs = np.zeros(16, dtype=complex)
    rhs[3] = 1.0
    system = LinearSystem(matrix=eye, rhs=rhs, formulation="SingleSingle",
                          grid=grid, curve=CIRCLE, kappa=2.0)
    dens = solve(system)
    full = np.concatenate([dens.psi1, dens.psi2])
    assert np.abs(full - rhs).max() < 1e-14
    assert dens.residual <= 1e-10
    assert abs(dens.condition - 1.0) < 1e-12


def test_solve_linearity():
    grid = collocation_nodes(8)
    system = assemble("SingleSingle", APPLE, grid, 2.0,
                      incident=PointSource(kappa=2.0, source=(0.1, 0.2)))
    dens = solve(system)
    c = 2.0 - 3.0j
    dens_c = solve(with_rhs(system, c * system.rhs))
    assert np.abs(dens_c.psi1 - c * dens.psi1).max() < 1e-10 * np.abs(dens.psi1).max()
    assert np.abs(dens_c.psi2 - c * dens.psi2).max() < 1e-10 * np.abs(dens.psi2).max()


def test_residual_reported_small():
    grid = collocation_nodes(16)
    for formulation in FORMULATIONS:
        system = assemble(formulation, APPLE, grid, 2.0,
                          incident=PlaneWave(kappa=2.0, theta=np.pi / 6))
        dens = solve(system)
        assert dens.residual <= 1e-10
        assert np.isfinite(dens.condition)


def test_direct_and_regularized_densities_agree():
    # both double-single discretizations target the same continuous system,
    # so their densities coincide in the limit; the gap shrinks spectrally
    # and is below 1e-6 by n = 128
    incident = PointSource(kappa=2.0, source=(0.1, 0.2))

    def gap(n):
        grid = collocation_nodes(n)
        d1 = solve(assemble("DoubleSingle_A1", APPLE, grid, 2.0, incident=incident))
        d2 = solve(assemble("DoubleSingle_A2", APPLE, grid, 2.0, incident=incident))
        return max(np.abs(d1.psi1 - d2.psi1).max(), np.abs(d1.psi2 - d2.psi2).max())

    g64, g128 = gap(64), gap(128)
    assert g128 < 1e-2 * g64
    assert g128 <= 1e-6


def test_solve_requires_rhs():
    system = assemble("SingleSingle", APPLE, collocation_nodes(4), 2.0)
    with pytest.raises(ValueError):
        solve(system)
    with pytest.raises(ValueError):
        with_rhs(system, np.ones(5))


def test_operator_self_convergence():
    # applying the discrete operator to samples of a fixed smooth density
    # converges spectrally as n doubles
    def apply_at(n):
        grid = collocation_nodes(n)
        a = assemble("SingleSingle", APPLE, grid, 2.0).matrix
        psi = np.concatenate([np.exp(np.sin(grid.nodes)), np.cos(grid.nodes)])
        out = a @ psi
        # compare at the shared subset of nodes (every other node of 2n)
        return out.reshape(2, 2 * n)

    v8 = apply_at(8)
    v16 = apply_at(16)
    v32 = apply_at(32)
    d1 = np.abs(v16[:, ::2] - v8).max()
    d2 = np.abs(v32[:, ::2] - v16).max()
    assert d2 < d1 * 0.1
