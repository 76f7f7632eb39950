"""Physical parameters and the generalized Hulthen potential family.

Natural units (hbar = c = 1) throughout.  The scalar potential is

    S_q(x) = -S0 exp(-alpha x) / (1 - q exp(-alpha x))

with four variants: the real potential, the PT-symmetric one obtained by
alpha -> i alpha, the pseudo-Hermitian one (alpha, S0, q all -> i times
themselves) and the PT-symmetric exponential potential (q = 0).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError

POLE_TOL = 1e-12


class Variant(str, enum.Enum):
    REAL = "real"
    PT = "pt"
    PSEUDO = "pseudo"
    EXPONENTIAL = "exp"

    @property
    def is_complex(self) -> bool:
        return self is not Variant.REAL


@dataclass(frozen=True)
class PotentialParams:
    """Inputs shared by every formula in the package.

    ``q == 0`` selects the exponential family and is only allowed together
    with ``Variant.EXPONENTIAL``.
    """

    m: float
    alpha: float
    s0: float
    q: float
    variant: Variant = Variant.REAL

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        for name in ("m", "alpha", "s0"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be a positive finite number, got {value!r}")
        if not math.isfinite(self.q):
            raise DomainError(f"q must be finite, got {self.q!r}")
        if self.variant is Variant.EXPONENTIAL and self.q != 0:
            raise DomainError("the exponential variant requires q = 0")
        if self.variant is not Variant.EXPONENTIAL and self.q == 0:
            raise DomainError(f"variant {self.variant.value!r} requires q != 0")

    def with_(self, **changes) -> PotentialParams:
        fields = dict(m=self.m, alpha=self.alpha, s0=self.s0, q=self.q, variant=self.variant)
        fields.update(changes)
        return PotentialParams(**fields)

    @property
    def pole(self) -> float | None:
        """Location of the real-variant singularity, ``ln(q)/alpha`` (q > 0 only)."""
        if self.q > 0:
            return math.log(self.q) / self.alpha
        return None

    @property
    def pt_exists(self) -> bool:
        """Existence condition q^2 alpha^2 >= 4 S0^2 of the complex variants."""
        return self.q**2 * self.alpha**2 >= 4 * self.s0**2


@dataclass(frozen=True)
class DerivedSymbols:
    gamma2: float
    beta2: float
    a: float
    b: float | None
    alpha: float
    m: float

    def eps_of(self, energy: float) -> float:
        """sqrt(m^2 - E^2)/alpha below threshold, sqrt(E^2 - m^2)/alpha above it."""
        return math.sqrt(abs(self.m**2 - energy**2)) / self.alpha


def derived(params: PotentialParams) -> DerivedSymbols:
    gamma2 = params.s0**2 / params.alpha**2
    beta2 = 2 * params.m * params.s0 / params.alpha**2
    q2 = params.q**2
    a = math.sqrt(q2 + 4 * gamma2)
    b = math.sqrt(q2 - 4 * gamma2) if params.pt_exists else None
    return DerivedSymbols(gamma2, beta2, a, b, params.alpha, params.m)


class LevelKind(str, enum.Enum):
    KAPPA = "kappa"
    MU = "mu"
    DELTA = "delta"


@dataclass(frozen=True)
class LevelParameter:
    kind: LevelKind
    value: float


def _root_term(params: PotentialParams, sign: int) -> float:
    arg = params.q**2 * params.alpha**2 + sign * 4 * params.s0**2
    if arg < 0:
        raise DomainError(
            f"q^2 alpha^2 - 4 S0^2 = {arg:.6g} < 0: complex variants have no bound states"
        )
    return math.sqrt(arg)


def level_parameter(params: PotentialParams, kind: LevelKind | str, n: int) -> LevelParameter:
    """kappa_n, mu_n or delta_n for level ``n``."""
    kind = LevelKind(kind)
    shift = params.q * params.alpha * (2 * n + 1)
    if kind is LevelKind.KAPPA:
        value = _root_term(params, +1) + shift
    elif kind is LevelKind.MU:
        value = _root_term(params, -1) + shift
    else:
        value = _root_term(params, -1) - shift
    return LevelParameter(kind, value)


# --- potentials -----------------------------------------------------------


def _substituted_denominator(params: PotentialParams, x):
    """Denominator of the potential after the variant's complex substitution."""
    x = np.asarray(x, dtype=float)
    al, q = params.alpha, params.q
    if params.variant is Variant.REAL:
        with np.errstate(over="ignore"):
            return 1 - q * np.exp(-al * x)
    if params.variant is Variant.PT:
        return 1 - q * np.exp(-1j * al * x)
    if params.variant is Variant.PSEUDO:
        return 1 - 1j * q * np.exp(-1j * al * x)
    return np.ones_like(x, dtype=complex)


def _check_poles(params: PotentialParams, x):
    den = np.abs(_substituted_denominator(params, x))
    bad = den < POLE_TOL
    if np.any(bad):
        where = np.atleast_1d(np.asarray(x, dtype=float))[np.atleast_1d(bad)]
        loc = params.pole if params.variant is Variant.REAL else None
        extra = f" (pole at x = {loc:.12g})" if loc is not None else ""
        raise PoleError(f"potential evaluated at a pole: x = {where[0]:.12g}{extra}")


def substituted_potential(params: PotentialParams, x):
    """Evaluate the real formula with complex parameters plugged in directly.

    Independent route used to check the closed trigonometric forms.
    """
    x = np.asarray(x, dtype=float)
    s0, q, al = complex(params.s0), complex(params.q), complex(params.alpha)
    if params.variant is Variant.PT:
        al = 1j * al
    elif params.variant is Variant.PSEUDO:
        s0, q, al = 1j * s0, 1j * q, 1j * al
    elif params.variant is Variant.EXPONENTIAL:
        al = 1j * al
    e = np.exp(-al * x)
    return -s0 * e / (1 - q * e)


def potential_value(params: PotentialParams, x):
    """S(x) for the selected variant, as a complex scalar or array."""
    _check_poles(params, x)
    x = np.asarray(x, dtype=float)
    s0, q, al = params.s0, params.q, params.alpha
    v = params.variant
    if v is Variant.REAL:
        with np.errstate(over="ignore"):
            out = (-s0 / (np.exp(al * x) - q)).astype(complex)
    elif v is Variant.PT:
        c, s = np.cos(al * x), np.sin(al * x)
        out = s0 * (q - c + 1j * s) / (q * q - 2 * q * c + 1)
    elif v is Variant.PSEUDO:
        c, s = np.cos(al * x), np.sin(al * x)
        out = s0 * (q - s - 1j * c) / (q * q - 2 * q * s + 1)
    else:
        out = -s0 * np.exp(-1j * al * x)
    return out[()] if out.ndim == 0 else out


def real_potential(params: PotentialParams, x):
    """Real-valued S(x) of the real variant; asserts the imaginary part is zero."""
    if params.variant is not Variant.REAL:
        raise DomainError("real_potential requires the real variant")
    val = np.asarray(potential_value(params, x))
    if np.any(np.abs(val.imag) > 1e-14):
        raise AssertionError("real variant produced a complex value")
    out = val.real
    return out[()] if out.ndim == 0 else out


def linearized_potential(params: PotentialParams, x):
    """Small-alpha expansion S0/(q-1) + S0 alpha x/(q-1)^2 near the origin."""
    if params.variant is not Variant.REAL:
        raise DomainError("linearization is defined for the real variant")
    if params.q == 1:
        raise PoleError("linearized potential has a pole at q = 1")
    x = np.asarray(x, dtype=float)
    d = params.q - 1
    out = params.s0 / d + params.s0 * params.alpha * x / d**2
    return out[()] if out.ndim == 0 else out


def effective_quantities(params: PotentialParams, energy: float, x):
    """Schrodinger-like effective energy and potential of the scalar KG problem."""
    if params.variant is not Variant.REAL:
        raise DomainError("effective quantities are defined for the real variant")
    s = real_potential(params, x)
    m = params.m
    e_eff = (energy**2 - m**2) / (2 * m)
    u_eff = s**2 / (2 * m) + s
    return e_eff, u_eff


class SymmetryMode(str, enum.Enum):
    PT = "pt"
    PSEUDO = "pseudo"


def default_reflection_point(params: PotentialParams) -> float:
    # pseudo-Hermitian potential closes S(xi - x) = S*(x) at xi = pi/alpha
    if params.variant is Variant.PSEUDO:
        return math.pi / params.alpha
    return 0.0


def symmetry_deviation(params: PotentialParams, xi: float | None = None, mode=SymmetryMode.PT, grid=None):
    """max |S(xi - x) - conj S(x)| over ``grid``.

    Both modes test the same potential-level identity; the pseudo-Hermitian
    statement eta S eta^-1 = S* with eta the parity about xi/2 reduces to it.
    """
    if not params.variant.is_complex:
        raise DomainError("symmetry checks need a complex variant")
    SymmetryMode(mode)
    if xi is None:
        xi = default_reflection_point(params)
    if grid is None:
        grid = np.linspace(-3, 3, 101)
    grid = np.asarray(grid, dtype=float)
    lhs = potential_value(params, xi - grid)
    rhs = np.conj(potential_value(params, grid))
    return float(np.max(np.abs(lhs - rhs)))
