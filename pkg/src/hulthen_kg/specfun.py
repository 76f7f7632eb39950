"""Jacobi polynomials, Kummer 1F1 and Whittaker M for complex arguments.

All three are written directly: Jacobi by its three-term recurrence in the
degree, 1F1 by its Maclaurin series.  The package only needs 1F1 at
moderate |z| (a dozen or so), where the plain series is accurate in double
precision.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError


@dataclass(frozen=True)
class SeriesControl:
    rel_tol: float = 1e-14
    max_terms: int = 10000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_SERIES = SeriesControl()


def jacobi_p(n: int, alpha, beta, x):
    """P_n^(alpha, beta)(x) by upward recurrence; complex parameters allowed.

    ``x`` may be a scalar or an array.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
    n = int(n)
    a, b = complex(alpha), complex(beta)
    x = np.asarray(x, dtype=complex)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev[()] if p_prev.ndim == 0 else p_prev
    p = (a + 1) + (a + b + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        s = 2 * k + a + b
        den = 2 * k * (k + a + b) * (s - 2)
        if den == 0:
            raise DomainError(
                f"Jacobi recurrence denominator vanishes at n = {k} "
                f"(alpha = {a}, beta = {b})"
            )
        c1 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c2 = 2 * (k + a - 1) * (k + b - 1) * s
        p_prev, p = p, (c1 * p - c2 * p_prev) / den
    return p[()] if p.ndim == 0 else p


class SeriesResult(NamedTuple):
    value: complex
    error: float
    terms: int


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == int(z.real)


def kummer_1f1(a, b, z, ctrl: SeriesControl = DEFAULT_SERIES) -> SeriesResult:
    """Confluent hypergeometric 1F1(a; b; z) by its Maclaurin series.

    Summation stops once two consecutive terms fall below
    ``ctrl.rel_tol * |partial sum|``.  The returned error estimate is the
    magnitude of the last term added.
    """
    a, b, z = complex(a), complex(b), complex(z)
    if _is_nonpositive_integer(b):
        raise PoleError(f"1F1 has a pole at b = {b.real:g}")
    total = 1.0 + 0j
    term = 1.0 + 0j
    small = 0
    for k in range(ctrl.max_terms):
        term *= (a + k) / (b + k) * z / (k + 1)
        total += term
        if abs(term) <= ctrl.rel_tol * abs(total):
            small += 1
            if small == 2:
                return SeriesResult(total, abs(term), k + 2)
        else:
            small = 0
    raise ConvergenceError(
        f"1F1 series did not converge in {ctrl.max_terms} terms (a={a}, b={b}, z={z})",
        partial=total,
    )


def hyp1f1(a, b, z, ctrl: SeriesControl = DEFAULT_SERIES):
    """Vectorized value-only wrapper around :func:`kummer_1f1`."""
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    for idx, zz in np.ndenumerate(z):
        out[idx] = kummer_1f1(a, b, zz, ctrl).value
    return out[()] if out.ndim == 0 else out


def principal_power(z, p):
    """z**p on the principal branch, exp(p Log z), with 0**p = 0 for Re p > 0."""
    z = complex(z)
    p = complex(p)
    if z == 0:
        if p.real > 0:
            return 0j
        if p == 0:
            return 1 + 0j
        raise DomainError(f"0**{p} is singular")
    return cmath.exp(p * cmath.log(z))


def whittaker_m(mu, nu, z, ctrl: SeriesControl = DEFAULT_SERIES) -> complex:
    """Whittaker M_{mu,nu}(z) = e^{-z/2} z^{nu+1/2} 1F1(1/2+nu-mu; 1+2nu; z)."""
    mu, nu, z = complex(mu), complex(nu), complex(z)
    b = 1 + 2 * nu
    if _is_nonpositive_integer(b):
        raise PoleError(f"M_(mu,nu) undefined for 1 + 2 nu = {b.real:g}")
    if z == 0 and (nu + 0.5).real <= 0:
        raise DomainError("M_(mu,nu)(0) is singular for Re(nu + 1/2) <= 0")
    f = kummer_1f1(0.5 + nu - mu, b, z, ctrl).value
    return cmath.exp(-z / 2) * principal_power(z, nu + 0.5) * f
