import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hulthen_kg.errors import ConvergenceError, DomainError, PoleError
from hulthen_kg.specfun import SeriesControl, hyp1f1, jacobi_p, kummer_1f1, principal_power, whittaker_m

small = st.floats(-5, 5)


def rodrigues_jacobi(n, a, b, x):
    """Explicit sum  sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)."""

    def binom(top, k):
        out = 1
        for j in range(k):
            out *= (top - j) / (j + 1)
        return out

    return sum(
        binom(n + a, n - s) * binom(n + b, s) * ((x - 1) / 2) ** s * ((x + 1) / 2) ** (n - s)
        for s in range(n + 1)
    )


@settings(max_examples=50, deadline=None)
@given(n=st.integers(0, 5), ar=small, ai=small, br=small, bi=small, xr=st.floats(-2, 2), xi=st.floats(-1, 1))
def test_jacobi_matches_explicit_sum(n, ar, ai, br, bi, xr, xi):
    a, b, x = complex(ar, ai), complex(br, bi), complex(xr, xi)
    want = rodrigues_jacobi(n, a, b, x)
    got = jacobi_p(n, a, b, x)
    assert abs(got - want) <= 1e-10 * max(1, abs(want))


def test_jacobi_legendre_special_case():
    x = np.linspace(-1, 1, 7)
    np.testing.assert_allclose(jacobi_p(3, 0, 0, x).real, 0.5 * (5 * x**3 - 3 * x), atol=1e-14)


def test_jacobi_vs_mpmath():
    got = jacobi_p(4, 1.5 + 0.5j, -0.3j, 0.2 + 0.1j)
    want = complex(mp.jacobi(4, mp.mpc(1.5, 0.5), mp.mpc(0, -0.3), mp.mpc(0.2, 0.1)))
    assert abs(got - want) <= 1e-12 * abs(want)


def test_jacobi_bad_degree():
    with pytest.raises(DomainError):
        jacobi_p(-1, 0, 0, 0.3)


def test_jacobi_vanishing_recurrence_denominator():
    with pytest.raises(DomainError):
        jacobi_p(2, -1, -1, 0.3)


@settings(max_examples=40, deadline=None)
@given(r=st.floats(0, 5), t=st.floats(0, 2 * math.pi), ar=small, ai=small)
def test_kummer_a_equals_b(r, t, ar, ai):
    z = cmath.rect(r, t)
    a = complex(ar, ai)
    if abs(a - round(a.real)) < 1e-3 and a.real <= 0:
        a += 0.5
    got = kummer_1f1(a, a, z).value
    assert abs(got - cmath.exp(z)) <= 1e-12 * abs(cmath.exp(z))


@settings(max_examples=40, deadline=None)
@given(r=st.floats(1e-3, 5), t=st.floats(0, 2 * math.pi))
def test_kummer_one_two(r, t):
    z = cmath.rect(r, t)
    want = (cmath.exp(z) - 1) / z
    assert abs(kummer_1f1(1, 2, z).value - want) <= 1e-12 * abs(want)


def test_kummer_vs_mpmath_eigencondition_region():
    for a, b, z in [(0.5 - 1.5j, 1 - 1j, 12j), (0.5 - 0.5j, 1, 8.35j), (2 + 1j, 3.5 - 2j, -4 + 3j)]:
        want = complex(mp.hyp1f1(a, b, z))
        assert abs(kummer_1f1(a, b, z).value - want) <= 1e-11 * max(1, abs(want))


def test_kummer_terminating_polynomial():
    # 1F1(-2; 1; z) = 1 - 2 z + z^2 / 2
    z = 1.7 - 0.3j
    assert abs(kummer_1f1(-2, 1, z).value - (1 - 2 * z + z * z / 2)) < 1e-14


def test_kummer_pole_and_convergence_errors():
    with pytest.raises(PoleError):
        kummer_1f1(1, -2, 0.5)
    with pytest.raises(ConvergenceError) as exc:
        kummer_1f1(1, 1, 50, SeriesControl(max_terms=5))
    assert exc.value.partial is not None


def test_series_control_validation():
    with pytest.raises(ValueError):
        SeriesControl(rel_tol=0)
    with pytest.raises(ValueError):
        SeriesControl(max_terms=0)


def test_hyp1f1_vectorized():
    z = np.array([0.1, 1j, -2.0])
    np.testing.assert_allclose(hyp1f1(1, 1, z), np.exp(z), rtol=1e-13)


def test_whittaker_vs_mpmath():
    mu, nu, z = 0.3 - 0.2j, 0.25 + 0.1j, 1.2 + 0.7j
    want = complex(mp.whitm(mu, nu, z))
    assert abs(whittaker_m(mu, nu, z) - want) <= 1e-12 * abs(want)


def test_whittaker_errors():
    with pytest.raises(PoleError):
        whittaker_m(0, -1, 1.0)
    with pytest.raises(DomainError):
        whittaker_m(0, -0.75, 0)


def test_principal_power():
    assert principal_power(-1, 0.5) == pytest.approx(1j)
    assert principal_power(0, 2) == 0
    assert principal_power(0, 0) == 1
    with pytest.raises(DomainError):
        principal_power(0, -1)
