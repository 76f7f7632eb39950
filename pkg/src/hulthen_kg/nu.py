"""Nikiforov-Uvarov reduction of hypergeometric-type equations.

An equation

    psi'' + (tau~/sigma) psi' + (sigma~/sigma^2) psi = 0,

with deg sigma, deg sigma~ <= 2 and deg tau~ <= 1, is reduced by
psi = phi(z) y(z) to sigma y'' + tau y' + lambda y = 0.  Everything here is
closed-form manipulation of polynomials of degree <= 2 with complex
coefficients.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import BranchError, DomainError
from .model import PotentialParams, derived

DISC_TOL = 1e-10


@dataclass(frozen=True)
class Poly2:
    c0: complex = 0j
    c1: complex = 0j
    c2: complex = 0j

    def __post_init__(self):
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    def __call__(self, z):
        return self.c0 + self.c1 * z + self.c2 * z * z

    def __add__(self, other: Poly2) -> Poly2:
        return Poly2(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: Poly2) -> Poly2:
        return Poly2(self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2)

    def scale(self, k) -> Poly2:
        return Poly2(k * self.c0, k * self.c1, k * self.c2)

    def deriv(self) -> Poly2:
        return Poly2(self.c1, 2 * self.c2, 0)

    @property
    def degree(self) -> int:
        if self.c2 != 0:
            return 2
        if self.c1 != 0:
            return 1
        return 0 if self.c0 != 0 else -1

    def roots(self) -> tuple[complex, ...]:
        """Roots ordered by increasing modulus."""
        if self.c2 != 0:
            d = cmath.sqrt(self.c1**2 - 4 * self.c2 * self.c0)
            # pick the sign that avoids cancellation, then use r1 r2 = c0/c2
            if (self.c1.conjugate() * d).real < 0:
                d = -d
            w = -(self.c1 + d) / 2
            if w == 0:
                r = (0j, 0j)
            else:
                r = (w / self.c2, self.c0 / w)
            return tuple(sorted(r, key=lambda z: (abs(z), z.real, z.imag)))
        if self.c1 != 0:
            return (-self.c0 / self.c1,)
        return ()


def square(p: Poly2) -> Poly2:
    """Square of a polynomial of degree <= 1."""
    if p.c2 != 0:
        raise ValueError("square() expects degree <= 1")
    return Poly2(p.c0**2, 2 * p.c0 * p.c1, p.c1**2)


@dataclass(frozen=True)
class HypergeometricTypeEq:
    sigma: Poly2
    tau_tilde: Poly2
    sigma_tilde: Poly2

    def __post_init__(self):
        if self.tau_tilde.c2 != 0:
            raise DomainError("tau~ must have degree <= 1")
        if self.sigma.degree < 0:
            raise DomainError("sigma must not vanish identically")

    @property
    def half_diff(self) -> Poly2:
        """(sigma' - tau~)/2, the polynomial part of pi."""
        return (self.sigma.deriv() - self.tau_tilde).scale(0.5)

    def radicand(self, k) -> Poly2:
        """((sigma' - tau~)/2)^2 - sigma~ + k sigma."""
        return square(self.half_diff) - self.sigma_tilde + self.sigma.scale(k)


def _disc_in_k(eq: HypergeometricTypeEq):
    """Coefficients (k^2, k, 1) of disc_z P(z; k) = B(k)^2 - 4 A(k) C(k)."""
    base = eq.radicand(0)
    s = eq.sigma
    a0, a1 = base.c2, s.c2
    b0, b1 = base.c1, s.c1
    c0, c1 = base.c0, s.c0
    return (b1 * b1 - 4 * a1 * c1, 2 * b0 * b1 - 4 * (a0 * c1 + a1 * c0), b0 * b0 - 4 * a0 * c0)


@dataclass(frozen=True)
class KCandidates:
    k_plus: complex
    k_minus: complex
    flag: str | None = None

    def __iter__(self):
        yield self.k_plus
        yield self.k_minus


def k_candidates(eq: HypergeometricTypeEq) -> KCandidates:
    """Both roots of the zero-discriminant condition, k+ (larger real part) first."""
    q2, q1, q0 = _disc_in_k(eq)
    scale = max(abs(q2), abs(q1), abs(q0))
    if scale == 0:
        raise DomainError("indeterminate k: the discriminant vanishes identically")
    if abs(q2) <= 1e-14 * scale:
        if abs(q1) <= 1e-14 * scale:
            raise DomainError("indeterminate k: discriminant has no k dependence")
        k = -q0 / q1
        return KCandidates(k, k, flag="linear-in-k discriminant; single root")
    r1, r2 = Poly2(q0, q1, q2).roots()
    kp, km = sorted((r1, r2), key=lambda z: (z.real, z.imag), reverse=True)
    flag = None
    if abs(kp.imag) > 1e-12 * max(1.0, abs(kp)) and all(
        abs(c.imag) <= 1e-14 * max(1.0, abs(c)) for c in (q2, q1, q0)
    ):
        flag = "complex roots from a real discriminant polynomial"
    return KCandidates(kp, km, flag)


def perfect_square_root(p: Poly2) -> Poly2:
    """Linear r with r^2 = p, assuming p has (numerically) zero discriminant."""
    r1 = cmath.sqrt(p.c2)
    if abs(r1) > 1e-300:
        r0 = p.c1 / (2 * r1)
    else:
        # degree dropped to <= 1: a perfect square must then be constant
        r0 = cmath.sqrt(p.c0)
        r1 = 0j
    return Poly2(r0, r1, 0)


def discriminant_residual(p: Poly2, size: Poly2 | None = None) -> float:
    """|b^2 - 4ac| relative to the size of its two terms.

    ``size`` holds magnitudes to measure against instead of p's own
    coefficients, for when p came out of a cancelling sum.
    """
    m = p if size is None else size
    scale = max(abs(m.c1) ** 2, 4 * abs(m.c2 * m.c0))
    if scale == 0:
        return 0.0
    return abs(p.c1**2 - 4 * p.c2 * p.c0) / scale


@dataclass(frozen=True)
class Branch:
    k: complex
    which_k: str  # "k+" or "k-"
    sign: int  # sign in front of the square root in pi
    phi: Poly2
    tau: Poly2
    lam: complex

    @property
    def tau_prime(self) -> complex:
        return self.tau.c1

    @property
    def tag(self) -> str:
        return f"{self.which_k},{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class NUReduction:
    k: complex
    phi: Poly2
    tau: Poly2
    tau_prime: complex
    lam: complex
    branch_tag: str
    branches: tuple[Branch, ...] = field(repr=False, default=())
    rule: str = "re"


def _radicand_size(eq: HypergeometricTypeEq, k) -> Poly2:
    parts = (square(eq.half_diff), eq.sigma_tilde, eq.sigma.scale(k))
    return Poly2(*(sum(abs(getattr(t, c)) for t in parts) for c in ("c0", "c1", "c2")))


def all_branches(eq: HypergeometricTypeEq) -> tuple[Branch, ...]:
    """The four (k, sign) combinations, in the order k+/+, k+/-, k-/+, k-/-."""
    u = eq.half_diff
    out = []
    for which, k in zip(("k+", "k-"), k_candidates(eq)):
        p = eq.radicand(k)
        res = discriminant_residual(p, _radicand_size(eq, k))
        if res > DISC_TOL:
            raise DomainError(f"radicand for {which} is not a perfect square (rel. disc {res:.3g})")
        root = perfect_square_root(p)
        for sign in (+1, -1):
            phi = u + root.scale(sign)
            tau = eq.tau_tilde + phi.scale(2)
            lam = k + phi.c1
            out.append(Branch(k, which, sign, phi, tau, lam))
    return tuple(out)


def _negative_derivative(branches, tol=1e-12):
    """Branches whose tau' points 'down'.

    Re tau' < 0 is the usual rule.  When every tau' is purely imaginary (the
    exponential potential) the equation is real in the rotated variable
    i*z, and the rule becomes Im tau' < 0.
    """
    re_neg = [br for br in branches if br.tau_prime.real < -tol * abs(br.tau_prime)]
    if re_neg:
        return re_neg, "re"
    if all(abs(br.tau_prime.real) <= tol * max(abs(br.tau_prime), 1e-300) for br in branches):
        return [br for br in branches if br.tau_prime.imag < 0], "im"
    return [], "re"


def _tau_zero_inside(eq: HypergeometricTypeEq, br: Branch) -> bool:
    """tau vanishes strictly between the two real roots of sigma."""
    roots = eq.sigma.roots()
    coeffs = (eq.sigma.c0, eq.sigma.c1, eq.sigma.c2, br.tau.c0, br.tau.c1)
    if len(roots) != 2 or any(abs(c.imag) > 0 for c in coeffs) or br.tau.c1 == 0:
        return True
    r = sorted(z.real for z in roots)
    zt = (-br.tau.c0 / br.tau.c1).real
    return r[0] < zt < r[1]


def admissible_branches(eq: HypergeometricTypeEq, branches=None):
    """Branches passing the full NU rule, plus the name of the derivative rule used.

    The rule: tau' negative (see ``_negative_derivative``) and, when sigma is
    real with two real roots, tau vanishing inside the interval they bound.
    """
    if branches is None:
        branches = all_branches(eq)
    neg, rule = _negative_derivative(branches)
    return [br for br in neg if _tau_zero_inside(eq, br)], rule


def reduce(eq: HypergeometricTypeEq, boundary=None) -> NUReduction:
    """Select the admissible NU branch; ties go to the k- root.

    ``boundary``, if given, is a predicate on branches that replaces the
    generic rule.  It encodes what the solution has to do at the ends of
    the physical interval, for problems where that interval is not the one
    bounded by the roots of sigma.
    """
    branches = all_branches(eq)
    if boundary is None:
        chosen, rule = admissible_branches(eq, branches)
    else:
        chosen, rule = [br for br in branches if boundary(br)], "boundary"
    if not chosen:
        listing = ", ".join(f"{br.tag}: tau'={br.tau_prime:.6g}" for br in branches)
        raise BranchError(f"no admissible branch ({listing})")
    chosen.sort(key=lambda br: (br.which_k != "k-", br.tau_prime.real, br.tau_prime.imag))
    br = chosen[0]
    return NUReduction(br.k, br.phi, br.tau, br.tau_prime, br.lam, br.tag, branches, rule)


def lambda_n(reduction: NUReduction, eq: HypergeometricTypeEq, n: int) -> complex:
    """-n tau' - n(n-1)/2 sigma''."""
    return -n * reduction.tau_prime - n * (n - 1) / 2 * (2 * eq.sigma.c2)


@dataclass(frozen=True)
class FactorForm:
    """C * prod (z - r_i)^p_i * exp(lin * z + pole / (z - r_0)).

    Only the pieces a given sigma needs are nonzero.
    """

    roots: tuple[complex, ...]
    exponents: tuple[complex, ...]
    exp_linear: complex = 0j
    exp_pole: complex = 0j

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.ones_like(z)
        for r, p in zip(self.roots, self.exponents):
            out = out * np.exp(p * np.log(z - r))
        out = out * np.exp(self.exp_linear * z)
        if self.exp_pole != 0:
            out = out * np.exp(self.exp_pole / (z - self.roots[0]))
        return out[()] if out.ndim == 0 else out


def _factor_from_ratio(num: Poly2, sigma: Poly2) -> FactorForm:
    """Solve f'/f = num/sigma for deg num <= 1."""
    if num.c2 != 0:
        raise DomainError("numerator must have degree <= 1")
    deg = sigma.degree
    if deg == 2:
        r1, r2 = sigma.roots()
        if abs(r1 - r2) > 1e-12 * max(1.0, abs(r1)):
            c = sigma.c2
            p1 = num(r1) / (c * (r1 - r2))
            p2 = num(r2) / (c * (r2 - r1))
            return FactorForm((r1, r2), (p1, p2))
        # sigma = c (z - r)^2
        c = sigma.c2
        r = r1
        return FactorForm((r,), (num.c1 / c,), exp_pole=-num(r) / c)
    if deg == 1:
        (r,) = sigma.roots()
        s1 = sigma.c1
        return FactorForm((r,), (num(r) / s1,), exp_linear=num.c1 / s1)
    raise DomainError("sigma must have degree >= 1")


def weight_and_factor(reduction: NUReduction, eq: HypergeometricTypeEq):
    """Weight omega with (sigma omega)' = tau omega, and phi with phi'/phi = pi/sigma."""
    omega = _factor_from_ratio(reduction.tau - eq.sigma.deriv(), eq.sigma)
    phi = _factor_from_ratio(reduction.phi, eq.sigma)
    return omega, phi


# --- the two instantiations ---------------------------------------------


def hulthen_equation(params: PotentialParams, eps: complex) -> HypergeometricTypeEq:
    """Generalized Hulthen problem in z = S0 exp(-alpha x) at a given epsilon."""
    d = derived(params)
    s0, q = params.s0, params.q
    g2, b2 = d.gamma2, d.beta2
    sigma = Poly2(0, s0, -q)
    tau_t = Poly2(s0, -q, 0)
    sigma_t = Poly2(-(s0**2) * eps**2, s0 * (b2 + 2 * q * eps**2), -(g2 + q * b2 + q * q * eps**2))
    return HypergeometricTypeEq(sigma, tau_t, sigma_t)


def exponential_equation(params: PotentialParams, script_e: complex) -> HypergeometricTypeEq:
    """PT exponential problem in s = S0 exp(-i alpha x) at a given script-E."""
    al, m = params.alpha, params.m
    sigma = Poly2(0, 1, 0)
    tau_t = Poly2(1, 0, 0)
    sigma_t = Poly2(script_e**2, -2 * m / al**2, 1 / al**2)
    return HypergeometricTypeEq(sigma, tau_t, sigma_t)


def factor_exponents(eq: HypergeometricTypeEq, br: Branch) -> dict:
    """Exponents of the phi factor at each root of sigma."""
    f = _factor_from_ratio(br.phi, eq.sigma)
    return dict(zip(f.roots, f.exponents))


def hulthen_boundary_rule(params: PotentialParams, eq: HypergeometricTypeEq):
    """Branch predicate: the factor vanishes as z -> 0 (x -> +inf) and
    vanishes at z = S0/q for q > 0, or decays as z -> +inf for q < 0."""

    def ok(br: Branch) -> bool:
        ex = factor_exponents(eq, br)
        p0 = next(p for r, p in ex.items() if abs(r) < 1e-12 * params.s0)
        p1 = next(p for r, p in ex.items() if abs(r) >= 1e-12 * params.s0)
        if p0.real <= 0:
            return False
        if params.q > 0:
            return p1.real > 0
        return (p0 + p1).real < 0

    return ok


def hulthen_reduction(params: PotentialParams, eps: complex) -> NUReduction:
    """NU reduction of the generalized Hulthen problem with its boundary rule."""
    eq = hulthen_equation(params, eps)
    return reduce(eq, boundary=hulthen_boundary_rule(params, eq))


def hulthen_k_closed_form(params: PotentialParams, eps: float):
    """beta^2 +/- a eps."""
    d = derived(params)
    return d.beta2 + d.a * eps, d.beta2 - d.a * eps


def exponential_k_closed_form(params: PotentialParams, script_e: float):
    """-2m/alpha^2 +/- 2 script-E/alpha."""
    al, m = params.alpha, params.m
    return -2 * m / al**2 + 2 * script_e / al, -2 * m / al**2 - 2 * script_e / al


__all__ = [
    "Poly2",
    "HypergeometricTypeEq",
    "NUReduction",
    "Branch",
    "KCandidates",
    "FactorForm",
    "k_candidates",
    "all_branches",
    "admissible_branches",
    "reduce",
    "lambda_n",
    "weight_and_factor",
    "hulthen_equation",
    "hulthen_reduction",
    "hulthen_boundary_rule",
    "factor_exponents",
    "exponential_equation",
    "hulthen_k_closed_form",
    "exponential_k_closed_form",
    "discriminant_residual",
]
