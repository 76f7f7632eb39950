import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hulthen_kg.errors import DomainError, PoleError
from hulthen_kg.model import (
    LevelKind,
    PotentialParams,
    SymmetryMode,
    Variant,
    derived,
    effective_quantities,
    level_parameter,
    linearized_potential,
    potential_value,
    real_potential,
    substituted_potential,
    symmetry_deviation,
)

pos = st.floats(0.05, 3.0)
qs = st.floats(0.05, 0.95)
GRID = np.linspace(-3, 3, 101)


def test_invalid_params_rejected():
    with pytest.raises(DomainError):
        PotentialParams(-1, 1, 1, 1)
    with pytest.raises(DomainError):
        PotentialParams(1, 0, 1, 1)
    with pytest.raises(DomainError):
        PotentialParams(1, 1, float("nan"), 1)
    with pytest.raises(DomainError):
        PotentialParams(1, 1, 1, 0.5, Variant.EXPONENTIAL)
    with pytest.raises(DomainError):
        PotentialParams(1, 1, 1, 0, Variant.REAL)


def test_variant_from_string():
    assert PotentialParams(1, 1, 0.25, 1, "pt").variant is Variant.PT


def test_derived_symbols():
    d = derived(PotentialParams(1, 0.25, 0.25, 1))
    assert d.gamma2 == pytest.approx(1.0)
    assert d.beta2 == pytest.approx(8.0)
    assert d.a == pytest.approx(math.sqrt(5))
    assert d.b is None


def test_level_parameters():
    p = PotentialParams(1, 1, 0.25, 1, Variant.PT)
    assert level_parameter(p, LevelKind.MU, 0).value == pytest.approx(math.sqrt(0.75) + 1)
    assert level_parameter(p, "delta", 0).value == pytest.approx(-0.1339746, abs=1e-7)
    with pytest.raises(DomainError):
        level_parameter(p.with_(alpha=0.25), LevelKind.MU, 0)


def test_real_potential_values():
    p = PotentialParams(1, 0.25, 0.25, 1)
    x = np.array([1.0, 5.0])
    want = -0.25 * np.exp(-0.25 * x) / (1 - np.exp(-0.25 * x))
    np.testing.assert_allclose(real_potential(p, x), want, rtol=1e-14)


def test_real_potential_pole_raises():
    p = PotentialParams(1, 0.5, 0.25, 2.0)
    with pytest.raises(PoleError):
        potential_value(p, p.pole)


def test_woods_saxon_has_no_pole():
    p = PotentialParams(1, 1, 0.3, -1)
    v = real_potential(p, np.linspace(-40, 40, 801))
    assert np.all(np.isfinite(v)) and np.all(v < 0)


@pytest.mark.parametrize("variant,q", [("pt", 0.5), ("pt", 2.0), ("pseudo", 0.5), ("pseudo", 1.5), ("exp", 0.0)])
def test_closed_form_matches_substitution(variant, q):
    p = PotentialParams(1, 1.3, 0.4, q, variant)
    np.testing.assert_allclose(potential_value(p, GRID), substituted_potential(p, GRID), rtol=0, atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(al=pos, s0=pos, q=st.floats(0.05, 3.0).filter(lambda v: abs(v - 1) > 0.05))
def test_pt_symmetry_property(al, s0, q):
    p = PotentialParams(1, al, s0, q, Variant.PT)
    assert symmetry_deviation(p) <= 1e-12 * max(1, s0 / (1 - q) ** 2)


@settings(max_examples=50, deadline=None)
@given(al=pos, s0=pos, q=st.floats(0.05, 3.0).filter(lambda v: abs(v - 1) > 0.05))
def test_pseudo_symmetry_property(al, s0, q):
    p = PotentialParams(1, al, s0, q, Variant.PSEUDO)
    assert symmetry_deviation(p, mode=SymmetryMode.PSEUDO) <= 1e-12 * max(1, s0 / (1 - q) ** 2)


def test_pseudo_quarter_period_reflection_fails():
    p = PotentialParams(1, 1, 0.25, 0.5, Variant.PSEUDO)
    assert symmetry_deviation(p, xi=math.pi / 2) > 1e-2


def test_symmetry_needs_complex_variant():
    with pytest.raises(DomainError):
        symmetry_deviation(PotentialParams(1, 1, 0.25, 1))


@settings(max_examples=50, deadline=None)
@given(al=pos, s0=pos, q=qs)
def test_pt_potential_is_periodic(al, s0, q):
    p = PotentialParams(1, al, s0, q, Variant.PT)
    x = np.linspace(-1, 1, 11)
    np.testing.assert_allclose(potential_value(p, x + 2 * math.pi / al), potential_value(p, x), atol=1e-10)


def test_linearized_limit():
    p = PotentialParams(1, 1e-4, 0.25, 2.0)
    x = np.array([-0.5, 0.0, 0.5])
    np.testing.assert_allclose(linearized_potential(p, x), real_potential(p, x), rtol=1e-6)
    with pytest.raises(PoleError):
        linearized_potential(p.with_(q=1.0), x)


def test_effective_quantities():
    p = PotentialParams(1, 0.25, 0.25, 1)
    e_eff, u = effective_quantities(p, 0.87, 2.0)
    s = real_potential(p, 2.0)
    assert e_eff == pytest.approx((0.87**2 - 1) / 2)
    assert u == pytest.approx(s * s / 2 + s)
