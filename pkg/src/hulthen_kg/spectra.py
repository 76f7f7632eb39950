"""Bound-state energies for all potential variants.

Closed forms for q != 0 and a numerical eigenvalue search for the PT
exponential potential (q = 0), whose eigencondition is a zero of Kummer's
function at a fixed argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, NoBoundStateError, PoleError
from .model import LevelKind, LevelParameter, PotentialParams, Variant, derived, level_parameter
from .specfun import DEFAULT_SERIES, SeriesControl, kummer_1f1

UNVALIDATED_N = 10


@dataclass(frozen=True)
class BoundState:
    n: int
    energy_pair: tuple[float, float]
    level_param: LevelParameter
    epsilon: float
    flags: tuple[str, ...] = ()

    @property
    def energy(self) -> float:
        """The positive member of the +/- pair."""
        return self.energy_pair[0]


def _require(params: PotentialParams, variant: Variant):
    if params.variant is not variant:
        raise DomainError(f"expected variant {variant.value!r}, got {params.variant.value!r}")


def _pair(e: float) -> tuple[float, float]:
    e = abs(e)
    return (e, -e)


# --- real generalized Hulthen -----------------------------------------------


def _route_terms(params: PotentialParams, n: int):
    d = derived(params)
    q, a = params.q, d.a
    num = d.beta2 - 0.5 * (a * (2 * n + 1) + q * (2 * n * n + 2 * n + 1))
    den = a + q * (2 * n + 1)
    return num, den


def epsilon_route(params: PotentialParams, n: int) -> float:
    """epsilon_n from matching lambda to lambda_n, which is linear in epsilon."""
    _require(params, Variant.REAL)
    num, den = _route_terms(params, n)
    if den == 0:
        raise NoBoundStateError(f"no bound state at n = {n}: degenerate epsilon equation")
    eps = num / den
    if not eps > 0:
        raise NoBoundStateError(f"no bound state at n = {n}: epsilon = {eps:.6g} <= 0")
    return eps


def left_decay_exponent(params: PotentialParams, n: int, eps: float) -> float:
    """Power of z governing psi as x -> -infinity (q < 0); must be negative."""
    d = derived(params)
    q = params.q
    return eps + n + (d.a + q) / (2 * q)


def _check_admissible(params: PotentialParams, n: int, eps: float):
    if eps > params.m / params.alpha:
        raise NoBoundStateError(
            f"no bound state at n = {n}: epsilon = {eps:.6g} exceeds m/alpha (E^2 < 0)"
        )
    if params.q < 0:
        _, den = _route_terms(params, n)
        if den <= 0:
            raise NoBoundStateError(f"no bound state at n = {n}: a + q(2n+1) <= 0")
        p = left_decay_exponent(params, n, eps)
        if p >= 0:
            raise NoBoundStateError(
                f"no bound state at n = {n}: psi does not decay as x -> -inf (z power {p:.6g})"
            )


def real_hulthen_level(params: PotentialParams, n: int) -> BoundState:
    """Closed-form energy from kappa_n for the real potential."""
    _require(params, Variant.REAL)
    eps = epsilon_route(params, n)
    _check_admissible(params, n, eps)
    s0, q, m = params.s0, params.q, params.m
    kappa = level_parameter(params, LevelKind.KAPPA, n)
    k = kappa.value
    if k == 0:
        raise PoleError(f"kappa_{n} = 0")
    rad = (k * k - 4 * s0 * s0) * ((2 * s0 + 4 * q * m) ** 2 - k * k)
    if rad < 0:
        raise NoBoundStateError(f"no bound state at n = {n}: negative radicand {rad:.6g}")
    e = math.sqrt(rad) / (4 * q * k)
    if e * e > m * m * (1 + 1e-12):
        raise NoBoundStateError(f"no bound state at n = {n}: E^2 > m^2")
    return BoundState(n, _pair(e), kappa, eps)


def count_real_levels(params: PotentialParams) -> tuple[int | None, list[int]]:
    """(n_max, valid n) for the real potential; (None, []) when nothing binds."""
    _require(params, Variant.REAL)
    valid = []
    n = 0
    while True:
        num, den = _route_terms(params, n)
        if params.q > 0 and num <= 0:
            break
        if params.q < 0 and den <= 0:
            break
        try:
            real_hulthen_level(params, n)
        except NoBoundStateError:
            pass
        else:
            valid.append(n)
        n += 1
    return (valid[-1] if valid else None), valid


# --- complex variants -------------------------------------------------------


def _complex_level(params: PotentialParams, n: int, kind: LevelKind) -> BoundState:
    if not params.pt_exists:
        raise NoBoundStateError(
            "no bound states: q^2 alpha^2 < 4 S0^2 "
            f"({params.q**2 * params.alpha**2:.6g} < {4 * params.s0**2:.6g})"
        )
    s0, q, m = params.s0, params.q, params.m
    lp = level_parameter(params, kind, n)
    v = lp.value
    if v == 0:
        raise PoleError(f"{kind.value}_{n} = 0: energy formula has a pole at n = {n}")
    rad = (v * v + 4 * s0 * s0) * ((2 * s0 + 4 * q * m) ** 2 + v * v)
    e = math.sqrt(rad) / (4 * q * v)
    eps_hat = math.sqrt(max(e * e - m * m, 0.0)) / params.alpha
    flags = ("large-n regime unvalidated",) if n > UNVALIDATED_N else ()
    return BoundState(n, _pair(e), lp, eps_hat, flags)


def pt_level(params: PotentialParams, n: int) -> BoundState:
    """Real spectrum of the PT-symmetric potential (level parameter mu_n)."""
    _require(params, Variant.PT)
    return _complex_level(params, n, LevelKind.MU)


def pseudo_level(params: PotentialParams, n: int) -> BoundState:
    """Real spectrum of the pseudo-Hermitian potential (level parameter delta_n)."""
    _require(params, Variant.PSEUDO)
    return _complex_level(params, n, LevelKind.DELTA)


def level(params: PotentialParams, n: int) -> BoundState:
    """Dispatch on the variant (q != 0 only)."""
    if params.variant is Variant.REAL:
        return real_hulthen_level(params, n)
    if params.variant is Variant.PT:
        return pt_level(params, n)
    if params.variant is Variant.PSEUDO:
        return pseudo_level(params, n)
    raise DomainError("the exponential variant has no closed-form levels; use q0_pt_eigenvalues")


# --- q = 0: zeros of Kummer's function --------------------------------------


@dataclass(frozen=True)
class Q0Root:
    script_e: float
    residual: float
    bracket: tuple[float, float]
    accepted: bool = True

    def energies(self, params: PotentialParams) -> tuple[float, float]:
        e = math.sqrt(max(params.m**2 - (params.alpha * self.script_e) ** 2, 0.0))
        return _pair(e)


@dataclass(frozen=True)
class Q0Scan:
    roots: list[Q0Root]
    rejected: list[Q0Root] = field(default_factory=list)
    f_max: float = 0.0
    accept_tol: float = 0.0


def eigencondition(params: PotentialParams, script_e: float, ctrl: SeriesControl = DEFAULT_SERIES):
    """1F1(1/2 - iE - im/alpha; 1 - 2iE; 2i S0/alpha) at script-E = E."""
    m, al, s0 = params.m, params.alpha, params.s0
    a = 0.5 - 1j * script_e - 1j * m / al
    b = 1 - 2j * script_e
    return kummer_1f1(a, b, 2j * s0 / al, ctrl).value


def q0_pt_eigenvalues(
    params: PotentialParams,
    scan_points: int = 2001,
    tol: float = 1e-10,
    accept_rel: float = 1e-8,
    ctrl: SeriesControl = DEFAULT_SERIES,
) -> Q0Scan:
    """Scan |F|^2 on [0, m/alpha], refine each local minimum, accept near-zeros.

    A minimum is accepted when the refined |F| is at most ``accept_rel``
    times the largest |F| seen on the scan.  Rejected minima are returned
    too, so the caller can see how close they came.
    """
    _require(params, Variant.EXPONENTIAL)
    if scan_points < 3:
        raise ValueError("scan_points must be >= 3")
    upper = params.m / params.alpha
    grid = np.linspace(0.0, upper, scan_points)
    f = np.array([abs(eigencondition(params, e, ctrl)) for e in grid])
    f_max = float(f.max())
    accept_tol = accept_rel * f_max

    def obj(e):
        return abs(eigencondition(params, e, ctrl)) ** 2

    roots, rejected = [], []
    last = scan_points - 1
    for i in range(scan_points):
        left = f[i - 1] if i > 0 else np.inf
        right = f[i + 1] if i < last else np.inf
        if not (f[i] <= left and f[i] < right) and not (f[i] < left and f[i] <= right):
            continue
        lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, last)]
        best_e, best_f = grid[i], f[i]
        res = minimize_scalar(obj, bounds=(lo, hi), method="bounded", options={"xatol": tol})
        cand = [(float(res.x), math.sqrt(res.fun))]
        if i in (0, last):
            cand.append((float(grid[i]), float(f[i])))
        for e_c, f_c in cand:
            if f_c < best_f:
                best_e, best_f = e_c, f_c
        root = Q0Root(float(best_e), float(best_f), (float(lo), float(hi)), bool(best_f <= accept_tol))
        (roots if root.accepted else rejected).append(root)
    return Q0Scan(roots, rejected, f_max, accept_tol)
