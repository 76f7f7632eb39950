import cmath
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hulthen_kg.errors import DomainError, NoBoundStateError
from hulthen_kg.model import LevelKind, PotentialParams, Variant, level_parameter
from hulthen_kg.specfun import SeriesControl
from hulthen_kg.spectra import (
    UNVALIDATED_N,
    count_real_levels,
    eigencondition,
    epsilon_route,
    level,
    pseudo_level,
    pt_level,
    q0_pt_eigenvalues,
    real_hulthen_level,
)

# binding energies E0 - m, S0 = 0.25, m = 1
TABLE1 = {
    (0.5, 1.0): 0.802776,
    (0.5, 2.0): 0.614831,
    (1.0, 0.5): 0.600781,
    (1.0, 1.0): 0.260846,
    (1.0, 2.0): 0.506699,
    (1.5, 0.5): 0.182955,
    (1.5, 1.0): 0.204579,
    (1.5, 2.0): 0.474727,
    (2.0, 0.5): 0.126170,
    (2.0, 1.0): 0.180312,
    (2.0, 2.0): 0.459301,
}

# 40-digit reference values
E0_REAL = 0.8700100493312525871
E1_REAL = 0.9947373813284115648
EPS0_REAL = 1.9721359549995793928
E0_REAL_ALPHA_HALF = 0.9864248100756274176
PSEUDO_E0 = 4.3485921903352108269
Q0_ROOT_S0 = 8.352656409293745376  # m = 1, alpha = 2: F(0) = 0

REAL = PotentialParams(1, 0.25, 0.25, 1)


@st.composite
def sweep_params(draw):
    q = draw(st.floats(0.2, 3.0))
    al = draw(st.floats(0.1, 2.0))
    s0 = draw(st.floats(1e-3, 0.999)) * q * al / 2
    return PotentialParams(1.0, al, s0, q)


@pytest.mark.parametrize("cell", sorted(TABLE1))
def test_table1_cell(cell):
    q, al = cell
    p = PotentialParams(1, al, 0.25, q, Variant.PT)
    assert abs(pt_level(p, 0).energy - 1 - TABLE1[cell]) <= 5e-5


def test_table1_missing_cell():
    with pytest.raises(NoBoundStateError, match="no bound states"):
        pt_level(PotentialParams(1, 0.5, 0.25, 0.5, Variant.PT), 0)


def test_existence_boundary_is_inclusive():
    p = PotentialParams(1, 0.5, 0.25, 1.0, Variant.PT)
    assert p.q**2 * p.alpha**2 == 4 * p.s0**2
    lvl = pt_level(p, 0)
    assert lvl.level_param.value == pytest.approx(p.q * p.alpha)


def test_real_ground_state():
    lvl = real_hulthen_level(REAL, 0)
    assert lvl.energy == pytest.approx(E0_REAL, abs=1e-13)
    assert lvl.energy_pair == (lvl.energy, -lvl.energy)
    assert lvl.level_param.kind is LevelKind.KAPPA
    assert epsilon_route(REAL, 0) == pytest.approx(EPS0_REAL, abs=1e-12)
    assert math.sqrt(1 - (0.25 * EPS0_REAL) ** 2) == pytest.approx(lvl.energy, abs=1e-12)


def test_real_levels_listed():
    assert count_real_levels(REAL) == (1, [0, 1])
    assert real_hulthen_level(REAL, 1).energy == pytest.approx(E1_REAL, abs=1e-13)
    with pytest.raises(NoBoundStateError):
        real_hulthen_level(REAL, 2)


def test_real_second_parameter_set():
    p = REAL.with_(alpha=0.5)
    e_route = math.sqrt(1 - (0.5 * epsilon_route(p, 0)) ** 2)
    assert e_route == pytest.approx(0.98643, abs=1e-5)
    assert real_hulthen_level(p, 0).energy == pytest.approx(E0_REAL_ALPHA_HALF, abs=1e-13)


def test_weak_coupling_has_no_levels():
    p = PotentialParams(1, 1.0, 0.05, 1.0)
    assert count_real_levels(p) == (None, [])
    with pytest.raises(NoBoundStateError, match="no bound state"):
        real_hulthen_level(p, 0)


def test_woods_saxon_levels():
    assert count_real_levels(PotentialParams(1, 1, 1.5, -1))[1] == [0]
    # shallow well: no level at all
    assert count_real_levels(PotentialParams(1, 0.5, 0.1, -1)) == (None, [])


@settings(max_examples=100, deadline=None)
@given(p=sweep_params())
def test_route_equivalence(p):
    _, valid = count_real_levels(p)
    for n in valid:
        e24 = real_hulthen_level(p, n).energy
        e_route = math.sqrt(p.m**2 - (p.alpha * epsilon_route(p, n)) ** 2)
        assert abs(e24 - e_route) <= 1e-10 * p.m


@settings(max_examples=100, deadline=None)
@given(p=sweep_params())
def test_valid_levels_form_a_prefix(p):
    _, valid = count_real_levels(p)
    assert valid == list(range(len(valid)))
    for n in valid:
        lvl = real_hulthen_level(p, n)
        assert lvl.energy**2 <= p.m**2 * (1 + 1e-12)
        assert lvl.epsilon >= 0


@settings(max_examples=60, deadline=None)
@given(p=sweep_params(), n=st.integers(0, 5))
def test_mu_from_alpha_rotation(p, n):
    pt = p.with_(variant=Variant.PT)
    kappa_rad = p.q**2 * (1j * p.alpha) ** 2 + 4 * p.s0**2
    mu = abs(cmath.sqrt(kappa_rad)) + p.q * p.alpha * (2 * n + 1)
    assert level_parameter(pt, LevelKind.MU, n).value == pytest.approx(mu, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(p=sweep_params(), n=st.integers(0, 12))
def test_complex_levels_come_in_pairs(p, n):
    for v in (Variant.PT, Variant.PSEUDO):
        lvl = level(p.with_(variant=v), n)
        assert lvl.energy_pair[0] == -lvl.energy_pair[1] > 0
        assert ("large-n regime unvalidated" in lvl.flags) == (n > UNVALIDATED_N)


def test_fig1_limit_and_rate():
    target = math.sqrt(5) / 2
    for q in (0.5, 1, 1.5, 2):
        errs = []
        for k in (4, 5, 6):
            p = PotentialParams(1, 1, 10.0**-k, q, Variant.PT)
            errs.append(abs(pt_level(p, 0).energy - target))
        assert errs[-1] <= 1e-4
        assert 5 < errs[0] / errs[1] < 20 and 5 < errs[1] / errs[2] < 20


def test_pseudo_levels():
    p = PotentialParams(1, 1, 0.25, 1, Variant.PSEUDO)
    lvl = pseudo_level(p, 0)
    assert lvl.level_param.value == pytest.approx(-0.1339746, abs=1e-7)
    assert lvl.energy == pytest.approx(PSEUDO_E0, abs=1e-12)
    q2 = pseudo_level(p.with_(q=2.0), 0)
    assert q2.level_param.value == pytest.approx(math.sqrt(3.75) - 2, abs=1e-12)
    assert set(q2.energy_pair) == {q2.energy, -q2.energy}


def test_variant_guards():
    with pytest.raises(DomainError):
        pt_level(REAL, 0)
    with pytest.raises(DomainError):
        level(PotentialParams(1, 1, 1, 0, Variant.EXPONENTIAL), 0)
    with pytest.raises(NoBoundStateError):
        pseudo_level(PotentialParams(1, 0.5, 0.25, 0.5, Variant.PSEUDO), 0)


# --- q = 0 ------------------------------------------------------------------


def exp_params(s0, alpha=1.0):
    return PotentialParams(1, alpha, s0, 0, Variant.EXPONENTIAL)


def test_q0_weak_coupling_has_no_roots():
    for s0 in (1e-9, 1e-4, 1e-2):
        assert q0_pt_eigenvalues(exp_params(s0)).roots == []


def test_q0_reference_scan_stable_under_tighter_series():
    p = exp_params(1.0)
    scan = q0_pt_eigenvalues(p, scan_points=2001)
    tight = SeriesControl(rel_tol=1e-15)
    for r in scan.roots + scan.rejected:
        again = abs(eigencondition(p, r.script_e, tight))
        assert again == pytest.approx(r.residual, rel=1e-6, abs=1e-13)
        assert 0 <= r.script_e <= p.m / p.alpha


def test_q0_known_root():
    p = exp_params(Q0_ROOT_S0, alpha=2.0)
    scan = q0_pt_eigenvalues(p)
    assert len(scan.roots) == 1
    root = scan.roots[0]
    assert root.script_e == pytest.approx(0, abs=1e-8)
    assert root.residual <= scan.accept_tol
    ep, em = root.energies(p)
    assert ep == pytest.approx(1) and em == -ep
    assert abs(eigencondition(p, root.script_e, SeriesControl(rel_tol=1e-15))) == pytest.approx(root.residual, abs=1e-13)


@settings(max_examples=15, deadline=None)
@given(s0=st.floats(0.05, 8.0), al=st.floats(0.5, 4.0))
def test_q0_roots_are_physical(s0, al):
    p = exp_params(s0, al)
    scan = q0_pt_eigenvalues(p, scan_points=201)
    assume(scan.roots or scan.rejected)
    for r in scan.roots:
        ep, em = r.energies(p)
        assert 0 <= ep <= p.m and em == -ep
        assert r.residual <= scan.accept_tol


def test_q0_scan_argument_checks():
    with pytest.raises(ValueError):
        q0_pt_eigenvalues(exp_params(1.0), scan_points=2)
    with pytest.raises(DomainError):
        q0_pt_eigenvalues(REAL)
