"""Regenerate the Chebyshev coefficient tables in biharmbem/_specfun_coeffs.py.

Each table is a least-squares Chebyshev fit, computed from high precision
(mpmath, 60 digits) samples of the target function on its interval.  The fits
target the smooth factors left over after the standard singular / oscillatory
parts are peeled off:

  j0s, j1s      J0(x), J1(x)/x on 0 <= x <= 8, in u = x^2/32 - 1
  y0s, y1s      Y0 - (2/pi) ln(x/2) J0           on (0, 8], in u = x^2/32 - 1
                (Y1 - (2/pi) ln(x/2) J1 + 2/(pi x)) / x, same interval
  p0, q0,       modulus/phase factors P_n, x*Q_n of the large-argument form
  p1, q1        J_n = sqrt(2/(pi x)) (P cos chi - Q sin chi), x >= 8,
                in u = 2 (8/x)^2 - 1
  k0s, k1s      K0 + ln(x/2) I0 on (0, 2], in u = x^2/2 - 1
                (K1 - ln(x/2) I1 - 1/x) / x, same interval
  k0a, k1a      sqrt(x) e^x K_n(x) on x >= 2, in u = 4/x - 1
  i0a, i1a      sqrt(x) e^-x I_n(x) on x >= 18, in u = 36/x - 1

Run from the repository root:  python3 scripts/gen_specfun_coeffs.py
"""

import pathlib

import mpmath as mp
import numpy as np

mp.mp.dps = 60

NSAMPLE = 600

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "biharmbem" / "_specfun_coeffs.py"


def cheb_fit(f, deg):
    """Least-squares Chebyshev fit of f on u in [-1, 1] from NSAMPLE nodes."""
    u = np.cos(np.pi * (np.arange(NSAMPLE) + 0.5) / NSAMPLE)
    vals = np.array([float(f(mp.mpf(ui))) for ui in u])
    return np.polynomial.chebyshev.chebfit(u, vals, deg)


def check(name, coeffs, f, npts=2000):
    u = np.linspace(-1.0, 1.0, npts)
    approx = np.polynomial.chebyshev.chebval(u, coeffs)
    exact = np.array([float(f(mp.mpf(ui))) for ui in u])
    err = np.max(np.abs(approx - exact)) / np.max(np.abs(exact))
    print(f"{name}: deg {len(coeffs) - 1}, max scaled err {err:.3e}")
    return err


def x_small_j(u):
    # u = x^2/32 - 1  ->  x in [0, 8]
    return mp.sqrt(32 * (u + 1))


def x_small_k(u):
    # u = x^2/2 - 1  ->  x in [0, 2]
    return mp.sqrt(2 * (u + 1))


def x_large(u):
    # u = 2 (8/x)^2 - 1  ->  x in [8, inf)
    return 8 / mp.sqrt((u + 1) / 2)


def x_large_k(u):
    # u = 4/x - 1  ->  x in [2, inf)
    return 4 / (u + 1)


def x_large_i(u):
    # u = 36/x - 1  ->  x in [18, inf)
    return 36 / (u + 1)


def guarded(f):
    """Evaluate f with the singular u = -1 endpoint nudged off x = 0."""

    def g(u):
        if u <= -1 + mp.mpf("1e-12"):
            return f(mp.mpf(-1) + mp.mpf("1e-12"))
        return f(u)

    return g


def j0s(u):
    return mp.besselj(0, x_small_j(u))


def j1s(u):
    x = x_small_j(u)
    return mp.besselj(1, x) / x


def y0s(u):
    x = x_small_j(u)
    return mp.bessely(0, x) - 2 / mp.pi * mp.log(x / 2) * mp.besselj(0, x)


def y1s(u):
    x = x_small_j(u)
    rem = mp.bessely(1, x) - 2 / mp.pi * mp.log(x / 2) * mp.besselj(1, x) + 2 / (mp.pi * x)
    return rem / x


def chi(n, x):
    return x - (2 * n + 1) * mp.pi / 4


def pfac(n):
    def f(u):
        x = x_large(u)
        c = mp.sqrt(mp.pi * x / 2)
        return c * (mp.besselj(n, x) * mp.cos(chi(n, x)) + mp.bessely(n, x) * mp.sin(chi(n, x)))

    return f


def qfac(n):
    def f(u):
        x = x_large(u)
        c = mp.sqrt(mp.pi * x / 2)
        return x * c * (mp.bessely(n, x) * mp.cos(chi(n, x)) - mp.besselj(n, x) * mp.sin(chi(n, x)))

    return f


def k0s(u):
    x = x_small_k(u)
    return mp.besselk(0, x) + mp.log(x / 2) * mp.besseli(0, x)


def k1s(u):
    x = x_small_k(u)
    return (mp.besselk(1, x) - mp.log(x / 2) * mp.besseli(1, x) - 1 / x) / x


def k_asym(n):
    def f(u):
        x = x_large_k(u)
        return mp.sqrt(x) * mp.exp(x) * mp.besselk(n, x)

    return f


def i_asym(n):
    def f(u):
        x = x_large_i(u)
        return mp.sqrt(x) * mp.exp(-x) * mp.besseli(n, x)

    return f


TABLES = [
    # name, function, degree, guard the u = -1 endpoint (x = 0 or x = inf)
    ("J0_SMALL", j0s, 28, True),
    ("J1_SMALL", j1s, 28, True),
    ("Y0_SMALL", y0s, 28, True),
    ("Y1_SMALL", y1s, 28, True),
    ("P0_LARGE", pfac(0), 18, True),
    ("Q0_LARGE", qfac(0), 18, True),
    ("P1_LARGE", pfac(1), 18, True),
    ("Q1_LARGE", qfac(1), 18, True),
    ("K0_SMALL", k0s, 20, True),
    ("K1_SMALL", k1s, 20, True),
    ("K0_LARGE", k_asym(0), 28, True),
    ("K1_LARGE", k_asym(1), 28, True),
    ("I0_LARGE", i_asym(0), 20, True),
    ("I1_LARGE", i_asym(1), 20, True),
]


def main():
    lines = [
        '"""Chebyshev coefficient tables for the real Bessel family.',
        "",
        "Generated by scripts/gen_specfun_coeffs.py -- do not edit by hand.",
        '"""',
        "",
        "# fmt: off",
    ]
    for name, f, deg, guard in TABLES:
        g = guarded(f) if guard else f
        coeffs = cheb_fit(g, deg)
        check(name, coeffs, g)
        body = ",\n    ".join(repr(float(c)) for c in coeffs)
        lines.append(f"{name} = (\n    {body},\n)")
        lines.append("")
    lines.append("# fmt: on")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
