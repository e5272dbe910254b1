"""Dense collocation systems for the clamped-cavity scattering problem.

Three formulations share the same unknown layout (psi1, psi2) and the same
right-hand side scaling eta1 = 2 f1 o gamma, eta2 = 2 (f2 o gamma) |gamma'|:

  DoubleSingle_A1  direct system [[I, 0], [Ttilde0, -I]] + [[L, S], [R-H, K]]
                   with every log-split kernel discretized by R-weights
  DoubleSingle_A2  regularized system N + D: the extracted log operators are
                   discretized with the R/V/W weight families and pointwise
                   multipliers, the smooth remainder blocks like A1
  SingleSingle     [[S_H, S_M], [-I + K_H, -I + K_M]]

One grid serves both collocation and quadrature (Nystrom full
discretization).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Optional, Tuple, Union

import numpy as np
from scipy.linalg import lapack, lu_factor, lu_solve

from . import specfun as sf
from .geometry import (
    BoundaryCurve,
    Discretization,
    JetTable,
    jet_table,
    winding_number,
)
from .kernels import e_multipliers, remainder_matrices, split_matrices
from .quadrature import weight_table

FORMULATIONS = ("DoubleSingle_A1", "DoubleSingle_A2", "SingleSingle")

COND_WARN_THRESHOLD = 1e14
RESIDUAL_TOL = 1e-10

EIGENVALUE_HINT = (
    "system is numerically singular; the wavenumber may coincide with an "
    "interior Dirichlet eigenvalue of the cavity, for which the boundary "
    "integral formulation is not uniquely solvable"
)


@dataclass(frozen=True)
class PlaneWave:
    kappa: float
    theta: float

    def __post_init__(self):
        if not (self.kappa > 0):
            raise ValueError("wavenumber kappa must be positive")


@dataclass(frozen=True)
class PointSource:
    """Interior source of the manufactured exterior solution
    vH* = H0^(1)(kappa |x - source|), vM* = -(2i/pi) K0(kappa |x - source|)."""

    kappa: float
    source: Tuple[float, float]

    def __post_init__(self):
        if not (self.kappa > 0):
            raise ValueError("wavenumber kappa must be positive")


IncidentField = Union[PlaneWave, PointSource]


@dataclass(frozen=True)
class LinearSystem:
    matrix: np.ndarray
    rhs: Optional[np.ndarray]
    formulation: str
    grid: Discretization
    curve: BoundaryCurve
    kappa: float


@dataclass(frozen=True)
class DensityPair:
    psi1: np.ndarray
    psi2: np.ndarray
    condition: float = np.nan
    residual: float = np.nan


def _check_grid(curve: BoundaryCurve, grid: Discretization):
    if curve.graded and not grid.shifted:
        raise ValueError("graded curves require shifted collocation nodes")
    if grid.shifted and not curve.graded:
        raise ValueError("shifted nodes are only used with graded curves")


def rhs_from_incident(incident: IncidentField, curve: BoundaryCurve, grid: Discretization):
    """Sampled right-hand side (eta1, eta2) stacked to length 4n."""
    _check_grid(curve, grid)
    j = jet_table(curve, grid.nodes)
    kappa = incident.kappa
    if isinstance(incident, PlaneWave):
        d = np.array([np.cos(incident.theta), np.sin(incident.theta)])
        phase = np.exp(1j * kappa * j.point @ d)
        eta1 = -2.0 * phase
        eta2 = -2j * kappa * (j.normal @ d) * phase
    elif isinstance(incident, PointSource):
        src = np.asarray(incident.source, dtype=float)
        if winding_number(curve, src) != 1:
            raise ValueError("point source must lie strictly inside the cavity")
        rv = j.point - src
        r = np.sqrt((rv * rv).sum(axis=1))
        vh = sf.hankel1(0, kappa * r)
        vm = (-2j / np.pi) * sf.bessel_k0(kappa * r)
        nr = (j.normal * rv).sum(axis=1) / r
        dn = nr * (-kappa * sf.hankel1(1, kappa * r) + (2j * kappa / np.pi) * sf.bessel_k1(kappa * r))
        eta1 = 2.0 * (vh + vm)
        eta2 = 2.0 * dn
    else:
        raise TypeError("incident must be a PlaneWave or PointSource")
    return np.concatenate([eta1, eta2])


def _log_block(kid, jets: JetTable, curve, kappa, rtab, pi_n):
    chi1, chi2 = split_matrices(kid, jets, jets, kappa, curve)
    return rtab * chi1 + pi_n * chi2


def assemble(
    formulation: str,
    curve: BoundaryCurve,
    grid: Discretization,
    kappa: float,
    incident: Optional[IncidentField] = None,
) -> LinearSystem:
    """Build the dense 4n x 4n collocation matrix (and the right-hand side
    when an incident field is supplied)."""
    if formulation not in FORMULATIONS:
        raise ValueError(f"unknown formulation {formulation!r}")
    if not (kappa > 0):
        raise ValueError("wavenumber kappa must be positive")
    _check_grid(curve, grid)
    n = grid.n
    m = 2 * n
    pi_n = np.pi / n
    jets = jet_table(curve, grid.nodes)
    rtab = weight_table("R", grid).values
    eye = np.eye(m)

    if formulation == "DoubleSingle_A1":
        ttab = weight_table("T", grid).values
        chi1r, chi2r = split_matrices("R", jets, jets, kappa, curve)
        chi1h, chi2h = split_matrices("H", jets, jets, kappa, curve)
        b11 = eye + _log_block("L", jets, curve, kappa, rtab, pi_n)
        b12 = _log_block("S", jets, curve, kappa, rtab, pi_n)
        b21 = ttab + rtab * (chi1r - chi1h) + pi_n * (chi2r - chi2h)
        b22 = -eye + _log_block("K", jets, curve, kappa, rtab, pi_n)
    elif formulation == "DoubleSingle_A2":
        ttab = weight_table("T", grid).values
        em = e_multipliers(jets, kappa)
        m0 = 0.5j / np.pi * pi_n
        s0 = (-0.5 / np.pi) * rtab + m0
        s1 = (0.25 / np.pi) * weight_table("V", grid).values
        s2 = (-0.125 / np.pi) * weight_table("W", grid).values
        n11 = eye + em["E2"][:, None] * s2
        n12 = s0 + em["E1"][:, None] * s2
        n21 = ttab + m0 + 0.5 * em["E1"][:, None] * s0 + em["E3"][:, None] * s1 + em["E6"][:, None] * s2
        n22 = -eye - em["E2"][:, None] * s2
        blocks = {}
        for rc in ((1, 1), (1, 2), (2, 1), (2, 2)):
            chi1, chi2 = remainder_matrices(rc[0], rc[1], jets, jets, kappa, curve)
            blocks[rc] = rtab * chi1 + pi_n * chi2
        b11 = n11 + blocks[(1, 1)]
        b12 = n12 + blocks[(1, 2)]
        b21 = n21 + blocks[(2, 1)]
        b22 = n22 + blocks[(2, 2)]
    else:
        b11 = _log_block("S_H", jets, curve, kappa, rtab, pi_n)
        b12 = _log_block("S_M", jets, curve, kappa, rtab, pi_n)
        b21 = -eye + _log_block("K_H", jets, curve, kappa, rtab, pi_n)
        b22 = -eye + _log_block("K_M", jets, curve, kappa, rtab, pi_n)

    matrix = np.block([[b11, b12], [b21, b22]])
    if not np.all(np.isfinite(matrix)):
        raise FloatingPointError("assembled matrix contains non-finite entries")
    rhs = rhs_from_incident(incident, curve, grid) if incident is not None else None
    return LinearSystem(
        matrix=matrix, rhs=rhs, formulation=formulation, grid=grid, curve=curve, kappa=kappa
    )


def with_rhs(system: LinearSystem, rhs) -> LinearSystem:
    rhs = np.asarray(rhs, dtype=complex)
    if rhs.shape != (system.matrix.shape[0],):
        raise ValueError("right-hand side length must match the system size")
    return replace(system, rhs=rhs)


def solve(system: LinearSystem) -> DensityPair:
    """Dense LU solve with a 1-norm condition estimate and a backward
    residual check."""
    if system.rhs is None:
        raise ValueError("system has no right-hand side; attach one first")
    a = np.ascontiguousarray(system.matrix, dtype=complex)
    try:
        lu, piv = lu_factor(a)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(EIGENVALUE_HINT) from exc
    anorm = np.linalg.norm(a, 1)
    rcond, info = lapack.zgecon(lu, anorm, norm="1")
    cond = np.inf if rcond == 0 else 1.0 / rcond
    if info != 0 or not np.isfinite(cond):
        raise np.linalg.LinAlgError(EIGENVALUE_HINT)
    if cond > COND_WARN_THRESHOLD:
        warnings.warn(EIGENVALUE_HINT, RuntimeWarning, stacklevel=2)
    psi = lu_solve((lu, piv), system.rhs)
    resid = np.abs(a @ psi - system.rhs).max() / np.abs(system.rhs).max()
    if resid > RESIDUAL_TOL:
        raise np.linalg.LinAlgError(
            f"relative residual {resid:.2e} exceeds {RESIDUAL_TOL:.0e}; " + EIGENVALUE_HINT
        )
    m = len(psi) // 2
    return DensityPair(psi1=psi[:m], psi2=psi[m:], condition=float(cond), residual=float(resid))
