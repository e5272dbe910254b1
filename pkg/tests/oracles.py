"""Independent reference implementations used only by the tests.

Ascending-series Bessel evaluations with plain Python floats, written
directly from the classical series definitions.  They are deliberately
separate from the package implementation (different algorithms, no shared
code) and are accurate to ~1e-13 relative for moderate arguments x <= 12,
which is where the tests compare against them.
"""

import math

EULER = 0.5772156649015328606

_MAX_TERMS = 60


def _harmonic(k):
    return sum(1.0 / j for j in range(1, k + 1))


def j0_series(x):
    q = -0.25 * x * x
    term, total = 1.0, 1.0
    for k in range(1, _MAX_TERMS):
        term *= q / (k * k)
        total += term
    return total


def j1_series(x):
    q = -0.25 * x * x
    term = 0.5 * x
    total = term
    for k in range(1, _MAX_TERMS):
        term *= q / (k * (k + 1))
        total += term
    return total


def i0_series(x):
    q = 0.25 * x * x
    term, total = 1.0, 1.0
    for k in range(1, _MAX_TERMS):
        term *= q / (k * k)
        total += term
    return total


def i1_series(x):
    q = 0.25 * x * x
    term = 0.5 * x
    total = term
    for k in range(1, _MAX_TERMS):
        term *= q / (k * (k + 1))
        total += term
    return total


def y0_series(x):
    q = -0.25 * x * x
    term, total = 1.0, 0.0
    for k in range(1, _MAX_TERMS):
        term *= q / (k * k)
        total -= term * _harmonic(k)
    return (2.0 / math.pi) * ((math.log(0.5 * x) + EULER) * j0_series(x) + total)


def y1_series(x):
    q = -0.25 * x * x
    term = 0.5 * x
    total = term * (_harmonic(0) + _harmonic(1))
    for k in range(1, _MAX_TERMS):
        term *= q / (k * (k + 1))
        total += term * (_harmonic(k) + _harmonic(k + 1))
    return (2.0 / math.pi) * (
        (math.log(0.5 * x) + EULER) * j1_series(x) - 1.0 / x - 0.5 * total
    )


def k0_series(x):
    q = 0.25 * x * x
    term, total = 1.0, 0.0
    for k in range(1, _MAX_TERMS):
        term *= q / (k * k)
        total += term * _harmonic(k)
    return -(math.log(0.5 * x) + EULER) * i0_series(x) + total


def k1_series(x):
    q = 0.25 * x * x
    term = 0.5 * x
    total = term * (_harmonic(0) + _harmonic(1))
    for k in range(1, _MAX_TERMS):
        term *= q / (k * (k + 1))
        total += term * (_harmonic(k) + _harmonic(k + 1))
    return (math.log(0.5 * x) + EULER) * i1_series(x) + 1.0 / x - 0.5 * total


SERIES = {
    "j0": j0_series,
    "j1": j1_series,
    "y0": y0_series,
    "y1": y1_series,
    "i0": i0_series,
    "i1": i1_series,
    "k0": k0_series,
    "k1": k1_series,
}
