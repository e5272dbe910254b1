"""Exterior field evaluation, far-field patterns, and circle norms.

The scattered field splits into a radiating Helmholtz part vH and an
exponentially decaying modified-Helmholtz part vM; only vH contributes to
the far-field pattern.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import specfun as sf
from .assembly import DensityPair, FORMULATIONS
from .geometry import TWO_PI, BoundaryCurve, Discretization, curve_point, jet_table
from .quadrature import trapezoid

MIN_BOUNDARY_DISTANCE = 0.05


@dataclass(frozen=True)
class FieldSample:
    point: np.ndarray
    vH: complex
    vM: complex
    v: complex


@dataclass(frozen=True)
class FarField:
    angles: np.ndarray
    values: np.ndarray
    rho: complex


def _check_exterior(curve: BoundaryCurve, points, samples: int = 720):
    """Validate that every row of `points` is exterior and clear of the
    boundary; winding numbers and distances share one boundary sampling."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    t = TWO_PI * (np.arange(samples) + 0.5) / samples
    bnd = curve_point(curve, t)
    rv = bnd[None, :, :] - points[:, None, :]
    ang = np.arctan2(rv[:, :, 1], rv[:, :, 0])
    dang = np.diff(np.concatenate([ang, ang[:, :1]], axis=1), axis=1)
    dang = np.mod(dang + np.pi, TWO_PI) - np.pi
    wind = np.round(dang.sum(axis=1) / TWO_PI).astype(int)
    if np.any(wind != 0):
        raise ValueError("field evaluation point must be exterior to the cavity")
    dist = np.sqrt((rv**2).sum(axis=2)).min(axis=1)
    if np.any(dist < MIN_BOUNDARY_DISTANCE):
        raise ValueError(
            f"evaluation point closer than {MIN_BOUNDARY_DISTANCE} to the boundary; "
            "near-boundary quadrature is out of scope"
        )
    return points


def eval_field(
    densities: DensityPair,
    formulation: str,
    curve: BoundaryCurve,
    grid: Discretization,
    kappa: float,
    x,
) -> FieldSample:
    """Scattered field at one exterior point by the periodic trapezoid rule
    over the representation potentials."""
    if formulation not in FORMULATIONS:
        raise ValueError(f"unknown formulation {formulation!r}")
    x = _check_exterior(curve, x)[0]
    j = jet_table(curve, grid.nodes)
    rv = x - j.point
    r = np.sqrt((rv * rv).sum(axis=1))
    if formulation == "SingleSingle":
        vh = trapezoid(0.25j * sf.hankel1(0, kappa * r) * densities.psi1)
    else:
        nr = (j.normal * rv).sum(axis=1) / r
        vh = trapezoid(0.25j * kappa * sf.hankel1(1, kappa * r) * nr * densities.psi1)
    vm = trapezoid(sf.bessel_k0(kappa * r) / TWO_PI * densities.psi2)
    return FieldSample(point=x, vH=complex(vh), vM=complex(vm), v=complex(vh + vm))


def eval_fields(
    densities: DensityPair,
    formulation: str,
    curve: BoundaryCurve,
    grid: Discretization,
    kappa: float,
    points,
):
    """Vectorized field evaluation at many exterior points; returns
    (vH, vM) arrays.  Same checks and quadrature as eval_field."""
    if formulation not in FORMULATIONS:
        raise ValueError(f"unknown formulation {formulation!r}")
    points = _check_exterior(curve, points)
    j = jet_table(curve, grid.nodes)
    rv = points[:, None, :] - j.point[None, :, :]
    r = np.sqrt((rv * rv).sum(axis=2))
    if formulation == "SingleSingle":
        vh = trapezoid(0.25j * sf.hankel1(0, kappa * r) * densities.psi1[None, :])
    else:
        nr = (rv * j.normal[None, :, :]).sum(axis=2) / r
        vh = trapezoid(0.25j * kappa * sf.hankel1(1, kappa * r) * nr * densities.psi1[None, :])
    vm = trapezoid(sf.bessel_k0(kappa * r) / TWO_PI * densities.psi2[None, :])
    return vh, vm


def far_field(
    densities: DensityPair,
    formulation: str,
    curve: BoundaryCurve,
    grid: Discretization,
    kappa: float,
    angles,
) -> FarField:
    """Far-field pattern of the Helmholtz component at the given observation
    angles."""
    if formulation not in FORMULATIONS:
        raise ValueError(f"unknown formulation {formulation!r}")
    angles = np.atleast_1d(np.asarray(angles, dtype=float))
    j = jet_table(curve, grid.nodes)
    rho = np.exp(0.25j * np.pi) / np.sqrt(8.0 * kappa * np.pi)
    xhat = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    phase = np.exp(-1j * kappa * xhat @ j.point.T)
    if formulation == "SingleSingle":
        integrand = phase * densities.psi1[None, :]
    else:
        integrand = (-1j * kappa) * (xhat @ j.normal.T) * phase * densities.psi1[None, :]
    vals = rho * trapezoid(integrand)
    return FarField(angles=angles, values=vals, rho=complex(rho))


def circle_points(radius: float, count: int):
    """count uniformly spaced points on the circle |x| = radius."""
    ang = TWO_PI * np.arange(count) / count
    return radius * np.stack([np.cos(ang), np.sin(ang)], axis=1)


def l2_error_on_circle(values_a, values_b, radius: float, count: int = 256) -> float:
    """Absolute L2 norm of the difference of two fields sampled at `count`
    uniform points on the circle |x| = radius (trapezoid in arclength)."""
    a = np.asarray(values_a)
    b = np.asarray(values_b)
    if count < 64:
        raise ValueError("need at least 64 circle samples")
    if a.shape != (count,) or b.shape != (count,):
        raise ValueError("field samples must match the stated count")
    return float(np.sqrt(radius * (TWO_PI / count) * (np.abs(a - b) ** 2).sum()))
