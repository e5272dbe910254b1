"""Parameterized boundary kernels, split for logarithmic quadrature.

Every kernel chi(t, zeta) is decomposed as

    chi = chi1(t, zeta) * ln(4 sin^2((t - zeta)/2)) + chi2(t, zeta),

where chi1 has a Bessel-J/I closed form and chi2 is obtained by subtraction
off the diagonal and by closed-form limits on the diagonal.  The Helmholtz
kernels use genuine Hankel functions; the modified-Helmholtz kernels are
rewritten through H_n^(1)(iz) identities into K_n and I_n, so their values
are real.

Kernel tags: L, S, K, R, H belong to the double-layer/single-layer
formulation (Helmholtz double layer + modified single layer); S_H, S_M,
K_H, K_M to the two-single-layer formulation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import specfun as sf
from .geometry import TWO_PI, BoundaryCurve, JetTable, jet_table

KERNEL_IDS = ("L", "S", "K", "R", "H", "S_H", "S_M", "K_H", "K_M")

COINCIDENCE_TOL = 1e-10

EULER = sf.EULER


@dataclass(frozen=True)
class KernelSplitValue:
    log_coeff: complex
    smooth: complex


def _check_kappa(kappa):
    if not (kappa > 0):
        raise ValueError("wavenumber kappa must be positive")


def _circ_dist(dt):
    r = np.mod(dt, TWO_PI)
    return np.minimum(r, TWO_PI - r)


def _dot(a, b):
    return (a * b).sum(axis=-1)


# parameter separation below which the chord delta = gamma(t) - gamma(zeta)
# is rebuilt from a midpoint Taylor form: the direct difference carries ~1e-16
# absolute error that the 1/rho^2 terms of the H kernel amplify like 1/dt^3
NEAR_TAYLOR_TOL = 3e-3

# split representation of 2 pi so that wrapping a parameter difference across
# the period does not inject a ~1e-16 absolute error (which the Taylor chord
# would amplify); differences that need no wrap stay exactly unchanged
_TWO_PI_HI = 6.283185307179586
_TWO_PI_LO = 2.4492935982947064e-16


def _wrap_diff(d):
    k = np.round(d / TWO_PI)
    return (d - k * _TWO_PI_HI) - k * _TWO_PI_LO


def _h_eval(kappa, delta, rho, d1t, d1z, sin2):
    """Direct value and log coefficient of the hypersingular-remainder kernel
    H, elementwise over broadcastable arrays (delta has a trailing axis 2)."""
    z = kappa * rho
    dtd = _dot(d1t, delta)
    dzd = _dot(d1z, delta)
    htil = dtd * dzd / rho**2
    gg = _dot(d1t, d1z)
    # grouped evaluation: the H1 part carries coefficient
    # b = gamma'(t).gamma'(zeta) - 2*htil, which stays O(1) while both of
    # its terms approach |gamma'|^2 on the diagonal; the 1/(pi rho^2)
    # singularity of (i kappa/(2 rho)) H1 is peeled off and cancelled
    # against the added 1/(4 pi sin^2) term in floating point
    b = gg - 2.0 * htil
    h1part = (0.5j * kappa / rho) * sf.hankel1(1, z) - 1.0 / (np.pi * rho**2)
    chi = (
        (0.5j * kappa**2) * htil * sf.hankel1(0, z)
        + h1part * b
        + (b / (np.pi * rho**2) + 1.0 / (4.0 * np.pi * sin2))
    )
    chi1 = (-1.0 / TWO_PI) * (
        kappa**2 * htil * sf.bessel_j0(z) + (kappa / rho) * sf.bessel_j1(z) * b
    ) + 0.0j
    return chi, chi1


# ---------------------------------------------------------------------------
# off-diagonal evaluation


def _chi_matrices(kid, jt: JetTable, jz: JetTable, kappa, mask, curve=None):
    """chi1 and chi2 matrices of shape (len(jt), len(jz)); entries flagged in
    `mask` (parameter coincidence) are left as garbage for the caller to
    overwrite with diagonal closed forms.  When `curve` is given, H entries
    inside the near-diagonal Taylor band are recomputed with the accurate
    midpoint chord."""
    delta = jt.point[:, None, :] - jz.point[None, :, :]
    rho = np.sqrt(_dot(delta, delta))
    rho = np.where(mask, 1.0, rho)
    z = kappa * rho
    dt = jt.t[:, None] - jz.t[None, :]
    sin2 = np.sin(0.5 * dt) ** 2
    log4s = np.log(4.0 * np.where(mask, 1.0, sin2))

    if kid == "L":
        a = _dot(np.broadcast_to(jz.normal[None, :, :], delta.shape), delta) / rho
        chi = (0.5j * kappa) * a * sf.hankel1(1, z)
        chi1 = (-kappa / TWO_PI) * a * sf.bessel_j1(z) + 0.0j
    elif kid in ("S", "S_M"):
        chi = (1.0 / np.pi) * sf.bessel_k0(z) + 0.0j
        chi1 = (-1.0 / TWO_PI) * sf.bessel_i0(z) + 0.0j
    elif kid in ("K", "K_M"):
        a = _dot(np.broadcast_to(jt.normal[:, None, :], delta.shape), delta) / rho
        chi = (-kappa / np.pi) * a * sf.bessel_k1(z) + 0.0j
        chi1 = (-kappa / TWO_PI) * a * sf.bessel_i1(z) + 0.0j
    elif kid == "R":
        nn = _dot(
            np.broadcast_to(jt.normal[:, None, :], delta.shape),
            np.broadcast_to(jz.normal[None, :, :], delta.shape),
        )
        chi = (0.5j * kappa**2) * nn * sf.hankel1(0, z)
        chi1 = (-(kappa**2) / TWO_PI) * nn * sf.bessel_j0(z) + 0.0j
    elif kid == "H":
        d1t = np.broadcast_to(jt.d1[:, None, :], delta.shape)
        d1z = np.broadcast_to(jz.d1[None, :, :], delta.shape)
        sin2_safe = np.where(mask, 1.0, sin2)
        chi, chi1 = _h_eval(kappa, delta, rho, d1t, d1z, sin2_safe)
        if curve is not None:
            dist = _circ_dist(dt)
            near = (dist >= COINCIDENCE_TOL) & (dist < NEAR_TAYLOR_TOL)
            if near.any():
                ii, jj = np.nonzero(near)
                d = _wrap_diff(dt[ii, jj])
                mid = jet_table(curve, jz.t[jj] + 0.5 * d)
                dlt = d[:, None] * mid.d1 + (d**3 / 24.0)[:, None] * mid.d3
                rh = np.sqrt(_dot(dlt, dlt))
                cv, cv1 = _h_eval(kappa, dlt, rh, jt.d1[ii], jz.d1[jj], sin2[ii, jj])
                chi[ii, jj] = cv
                chi1[ii, jj] = cv1
    elif kid == "S_H":
        chi = 0.5j * sf.hankel1(0, z)
        chi1 = (-1.0 / TWO_PI) * sf.bessel_j0(z) + 0.0j
    elif kid == "K_H":
        a = _dot(np.broadcast_to(jt.normal[:, None, :], delta.shape), delta) / rho
        chi = (-0.5j * kappa) * a * sf.hankel1(1, z)
        chi1 = (kappa / TWO_PI) * a * sf.bessel_j1(z) + 0.0j
    else:
        raise ValueError(f"unknown kernel id {kid!r}")

    chi2 = chi - chi1 * log4s
    return chi1, chi2


# ---------------------------------------------------------------------------
# diagonal closed forms


def _diag_values(kid, j: JetTable, kappa):
    """(chi1, chi2) on the diagonal t = zeta, vectorized over the nodes."""
    sp2 = j.speed**2
    curv = _dot(j.normal, j.d2) / sp2
    log_half = np.log(0.5 * kappa * j.speed)
    helm_c = 0.5j - EULER / np.pi - log_half / np.pi
    if kid == "L":
        return np.zeros_like(sp2) + 0.0j, curv / TWO_PI + 0.0j
    if kid in ("S", "S_M"):
        # ln(i kappa |gamma'|/2) on the principal branch contributes i/2,
        # cancelling the i/2 term exactly: the value is real
        return -1.0 / TWO_PI + np.zeros_like(sp2) + 0.0j, (helm_c - 0.5j) + np.zeros_like(sp2)
    if kid in ("K", "K_M", "K_H"):
        return np.zeros_like(sp2) + 0.0j, curv / TWO_PI + 0.0j
    if kid == "R":
        return -(kappa**2) * sp2 / TWO_PI + 0.0j, kappa**2 * sp2 * helm_c
    if kid == "H":
        chi1 = -(kappa**2) * sp2 / (4.0 * np.pi) + 0.0j
        chi2 = (
            (np.pi * 1j - 1.0 - 2.0 * EULER - 2.0 * log_half) * kappa**2 * sp2 / (4.0 * np.pi)
            + 1.0 / (12.0 * np.pi)
            + _dot(j.d1, j.d2) ** 2 / (TWO_PI * sp2**2)
            - _dot(j.d2, j.d2) / (4.0 * np.pi * sp2)
            - _dot(j.d1, j.d3) / (6.0 * np.pi * sp2)
        )
        return chi1, chi2
    if kid == "S_H":
        return -1.0 / TWO_PI + np.zeros_like(sp2) + 0.0j, helm_c + np.zeros_like(sp2)
    raise ValueError(f"unknown kernel id {kid!r}")


# ---------------------------------------------------------------------------
# matrix-level API (used by assembly)


def split_matrices(kid, jt: JetTable, jz: JetTable, kappa, curve=None):
    """chi1 and chi2 on the product grid, with coincident pairs replaced by
    the diagonal closed forms."""
    _check_kappa(kappa)
    mask = _circ_dist(jt.t[:, None] - jz.t[None, :]) < COINCIDENCE_TOL
    with np.errstate(invalid="ignore", divide="ignore"):
        chi1, chi2 = _chi_matrices(kid, jt, jz, kappa, mask, curve)
    if mask.any():
        d1, d2 = _diag_values(kid, jt, kappa)
        ii, jj = np.nonzero(mask)
        chi1[ii, jj] = d1[ii]
        chi2[ii, jj] = d2[ii]
    return chi1, chi2


def e_multipliers(j: JetTable, kappa):
    """Pointwise multipliers of the operator-extraction splitting."""
    sp2 = j.speed**2
    d12 = _dot(j.d1, j.d2)
    d13 = _dot(j.d1, j.d3)
    e1 = kappa**2 * sp2
    e2 = kappa**2 * _dot(j.normal, j.d2)
    e3 = kappa**2 * d12
    e4 = kappa**4 * sp2**2 + 2.0 * kappa**2 * d13
    e5 = -0.75 * kappa**4 * sp2**2 + kappa**2 * d13
    return {"E1": e1, "E2": e2, "E3": e3, "E4": e4, "E5": e5, "E6": e4 - e5}


def remainder_matrices(row, col, jt: JetTable, jz: JetTable, kappa, curve=None):
    """Split kernels of the smooth-remainder block (row, col): the full
    kernel minus the extracted log operators (with their sin(t - zeta)
    weights) and minus the constant mean-value corrections.  The diagonal
    log coefficient is exactly zero by construction and is enforced."""
    _check_kappa(kappa)
    if (row, col) not in ((1, 1), (1, 2), (2, 1), (2, 2)):
        raise ValueError("block indices must be 1 or 2")
    mask = _circ_dist(jt.t[:, None] - jz.t[None, :]) < COINCIDENCE_TOL
    em = e_multipliers(jt, kappa)
    dt = jt.t[:, None] - jz.t[None, :]
    sn = np.sin(dt)
    sn2 = sn * sn
    with np.errstate(invalid="ignore", divide="ignore"):
        if (row, col) == (2, 1):
            c1r, c2r = _chi_matrices("R", jt, jz, kappa, mask, curve)
            c1h, c2h = _chi_matrices("H", jt, jz, kappa, mask, curve)
            chi1, chi2 = c1r - c1h, c2r - c2h
        else:
            base = {(1, 1): "L", (1, 2): "S", (2, 2): "K"}[(row, col)]
            chi1, chi2 = _chi_matrices(base, jt, jz, kappa, mask, curve)
    if (row, col) == (1, 1):
        chi1 = chi1 + em["E2"][:, None] / (8.0 * np.pi) * sn2
    elif (row, col) == (1, 2):
        chi1 = chi1 + 1.0 / TWO_PI + em["E1"][:, None] / (8.0 * np.pi) * sn2
        chi2 = chi2 - 0.5j / np.pi
    elif (row, col) == (2, 1):
        chi1 = (
            chi1
            + em["E1"][:, None] / (4.0 * np.pi)
            - em["E3"][:, None] / (4.0 * np.pi) * sn
            + em["E6"][:, None] / (8.0 * np.pi) * sn2
        )
        chi2 = chi2 - 0.5j / np.pi - em["E1"][:, None] * 0.25j / np.pi
    else:
        chi1 = chi1 - em["E2"][:, None] / (8.0 * np.pi) * sn2
    if mask.any():
        ii, jj = np.nonzero(mask)
        if (row, col) == (2, 1):
            _, d2r = _diag_values("R", jt, kappa)
            _, d2h = _diag_values("H", jt, kappa)
            diag2 = d2r - d2h - 0.5j / np.pi - em["E1"] * 0.25j / np.pi
        else:
            base = {(1, 1): "L", (1, 2): "S", (2, 2): "K"}[(row, col)]
            _, diag2 = _diag_values(base, jt, kappa)
            if (row, col) == (1, 2):
                diag2 = diag2 - 0.5j / np.pi
        chi1[ii, jj] = 0.0
        chi2[ii, jj] = diag2[ii]
    return chi1, chi2


# ---------------------------------------------------------------------------
# scalar API


def kernel_split(kid, curve: BoundaryCurve, kappa, t, zeta) -> KernelSplitValue:
    if kid not in KERNEL_IDS:
        raise ValueError(f"unknown kernel id {kid!r}")
    chi1, chi2 = split_matrices(kid, jet_table(curve, t), jet_table(curve, zeta), kappa, curve)
    return KernelSplitValue(log_coeff=complex(chi1[0, 0]), smooth=complex(chi2[0, 0]))


def kernel_direct(kid, curve: BoundaryCurve, kappa, t, zeta) -> complex:
    if kid not in KERNEL_IDS:
        raise ValueError(f"unknown kernel id {kid!r}")
    _check_kappa(kappa)
    if _circ_dist(t - zeta) < COINCIDENCE_TOL:
        raise ValueError("near-coincident arguments; use kernel_split")
    jt, jz = jet_table(curve, t), jet_table(curve, zeta)
    mask = np.zeros((1, 1), dtype=bool)
    chi1, chi2 = _chi_matrices(kid, jt, jz, kappa, mask, curve)
    log4s = np.log(4.0 * np.sin(0.5 * (t - zeta)) ** 2)
    return complex(chi1[0, 0] * log4s + chi2[0, 0])


def remainder_kernel(row, col, curve: BoundaryCurve, kappa, t, zeta) -> KernelSplitValue:
    chi1, chi2 = remainder_matrices(
        row, col, jet_table(curve, t), jet_table(curve, zeta), kappa, curve
    )
    return KernelSplitValue(log_coeff=complex(chi1[0, 0]), smooth=complex(chi2[0, 0]))
