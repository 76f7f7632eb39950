"""Eigenfunctions of every variant, normalization, nodes and ODE residuals.

The residual checks use the Klein-Gordon equation in the form

    psi'' + [-S^2 - 2 m S - (m^2 - E^2)] psi = 0.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple

import numpy as np
from scipy.integrate import simpson

from .errors import DomainError, NoBoundStateError
from .model import PotentialParams, Variant, derived, potential_value
from .specfun import hyp1f1, jacobi_p
from . import spectra

ENDPOINT_MASS_TOL = 1e-10


class ComplexBranch(NamedTuple):
    """Sign of the z-power exponent (+/- eps_hat) and of b in the exponents."""

    eps_sign: int
    b_sign: int = 1


@dataclass(frozen=True)
class WavefunctionSample:
    x: np.ndarray
    values: np.ndarray
    variant: Variant
    n: int | None
    energy: float
    normalization: float = 1.0
    branch: ComplexBranch | None = None
    evaluator: Callable | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        if x.ndim != 1 or x.size < 3 or np.any(np.diff(x) <= 0):
            raise DomainError("grid must be 1-d, strictly increasing, with >= 3 points")


# --- real variant ---------------------------------------------------------


def eval_real(params: PotentialParams, n: int, energy: float, x):
    """Jacobi-form eigenfunction of the real potential (unnormalized)."""
    if params.variant is not Variant.REAL:
        raise DomainError("eval_real requires the real variant")
    x = np.asarray(x, dtype=float)
    d = derived(params)
    s0, q, al = params.s0, params.q, params.alpha
    eps = d.eps_of(energy)
    log_z = math.log(s0) - al * x
    if q > 0:
        one_minus = -np.expm1(math.log(q) - al * x)
    else:
        one_minus = 1 - q * np.exp(-al * x)
    if np.any(one_minus < 0):
        bad = x[np.atleast_1d(one_minus < 0)] if x.ndim else x
        raise DomainError(
            f"S0 - q z < 0 left of the pole x = {params.pole:.12g} (e.g. x = {np.min(bad):.6g})"
        )
    base = s0 * one_minus
    expo = (d.a + q) / (2 * q)
    with np.errstate(divide="ignore"):
        psi = np.exp(eps * log_z) * np.power(base, expo)
    poly = jacobi_p(n, 2 * eps, d.a / q, 1 - 2 * q * np.exp(log_z) / s0)
    out = (psi * poly).astype(complex)
    return out[()] if out.ndim == 0 else out


# --- PT-symmetric and pseudo-Hermitian ------------------------------------


def _complex_z_and_base(params: PotentialParams, x):
    s0, q, al = params.s0, params.q, params.alpha
    phase = np.exp(-1j * al * x)
    if params.variant is Variant.PT:
        z = s0 * phase
        base = s0 - q * z
    elif params.variant is Variant.PSEUDO:
        z = 1j * s0 * phase
        base = 1j * s0 - 1j * q * z
    else:
        raise DomainError("complex eigenfunctions need the PT or pseudo-Hermitian variant")
    return z, base


def _check_cut(name: str, w, x):
    """Raise if consecutive samples of ``w`` straddle the negative real axis."""
    w = np.atleast_1d(w)
    x = np.atleast_1d(x)
    if w.size < 2:
        if w.size == 1 and w[0].imag == 0 and w[0].real < 0:
            raise DomainError(f"{name} lies on the branch cut at x = {x[0]:.6g}")
        return
    neg = (w.real[:-1] < 0) | (w.real[1:] < 0)
    flip = np.signbit(w.imag[:-1]) != np.signbit(w.imag[1:])
    hits = np.nonzero(neg & flip)[0]
    if hits.size:
        i = hits[0]
        raise DomainError(
            f"{name} crosses the principal branch cut for x in [{x[i]:.6g}, {x[i + 1]:.6g}]"
        )


def _cpow(w, p):
    return np.exp(p * np.log(w))


def _eval_complex_branch(params, n, energy, x, branch: ComplexBranch, check_cut=True):
    d = derived(params)
    if d.b is None:
        raise NoBoundStateError("no bound states: q^2 alpha^2 < 4 S0^2")
    x = np.asarray(x, dtype=float)
    q, s0 = params.q, params.s0
    eps_hat = math.sqrt(max(energy**2 - params.m**2, 0.0)) / params.alpha
    e = branch.eps_sign * eps_hat
    b = branch.b_sign * d.b
    z, base = _complex_z_and_base(params, x)
    if check_cut:
        _check_cut("z", z, x)
        _check_cut("power base", base, x)
    psi = _cpow(z, e) * _cpow(base, (b + q) / (2 * q)) * jacobi_p(n, 2 * e, b / q, 1 - 2 * q * z / s0)
    return psi[()] if np.ndim(psi) == 0 else psi


def _probe_grid(params: PotentialParams):
    """Short window where neither power base is near the principal cut."""
    al = params.alpha
    center = math.pi / (2 * al) if params.variant is Variant.PT else 0.0
    return np.linspace(center - 0.5 / al, center + 0.5 / al, 41), 1e-3 / al


def _bracket(params: PotentialParams, energy: float, x):
    s = potential_value(params, x)
    return -(s**2) - 2 * params.m * s - (params.m**2 - energy**2)


def pointwise_residual(params, energy, f, x, h):
    """Relative residual of f against the KG equation at points x (step h)."""
    x = np.asarray(x, dtype=float)
    p0, pm, pp = f(x), f(x - h), f(x + h)
    br = _bracket(params, energy, x)
    res = (pp - 2 * p0 + pm) / h**2 + br * p0
    norm = np.max(np.abs(p0)) * np.max(np.abs(br))
    if norm == 0:
        return 0.0
    return float(np.max(np.abs(res)) / norm)


@dataclass(frozen=True)
class BranchChoice:
    branch: ComplexBranch
    residuals: dict

    @property
    def separation(self) -> float:
        """Ratio of the runner-up residual to the winner's."""
        vals = sorted(self.residuals.values())
        if len(vals) < 2 or vals[0] == 0:
            return math.inf
        return vals[1] / vals[0]


def candidate_branches(variant: Variant) -> list[ComplexBranch]:
    if variant is Variant.PT:
        return [ComplexBranch(+1, +1), ComplexBranch(-1, +1)]
    return [ComplexBranch(s, t) for s in (+1, -1) for t in (+1, -1)]


@functools.lru_cache(maxsize=256)
def select_branch(params: PotentialParams, n: int, energy: float) -> BranchChoice:
    """Evaluate every candidate branch once and keep the smallest ODE residual."""
    xs, h = _probe_grid(params)
    residuals = {}
    for br in candidate_branches(params.variant):
        f = functools.partial(_eval_complex_branch, params, n, energy, branch=br)
        residuals[br] = pointwise_residual(params, energy, f, xs, h)
    best = min(residuals, key=residuals.get)
    return BranchChoice(best, residuals)


def eval_complex(params: PotentialParams, n: int, energy: float, x, branch: ComplexBranch | None = None):
    """Eigenfunction of the PT-symmetric or pseudo-Hermitian potential.

    Without an explicit ``branch`` the residual-selected one is used.
    """
    if branch is None:
        branch = select_branch(params, n, float(energy)).branch
    return _eval_complex_branch(params, n, energy, x, branch)


# --- q = 0 ----------------------------------------------------------------


def _q0_kummer_params(params: PotentialParams, script_e: float):
    a = 0.5 - 1j * script_e - 1j * params.m / params.alpha
    b = 1 - 2j * script_e
    return a, b


def eval_q0(params: PotentialParams, script_e: float, x):
    """Kummer-function eigenfunction of the PT exponential potential (A = 1)."""
    if params.variant is not Variant.EXPONENTIAL:
        raise DomainError("eval_q0 requires the exponential variant")
    x = np.asarray(x, dtype=float)
    s0, al = params.s0, params.alpha
    a, b = _q0_kummer_params(params, script_e)
    phase = np.exp(-1j * al * x)
    pref = np.exp(-1j * script_e * math.log(s0) - 1j * (s0 / al) * phase - al * script_e * x)
    out = pref * hyp1f1(a, b, (2j / al) * s0 * phase)
    return out[()] if np.ndim(out) == 0 else out


def rejected_q0_factor(params: PotentialParams, script_e: float, x):
    """z^(2iE) of the discarded solution, continued along x (no principal cut)."""
    x = np.asarray(x, dtype=float)
    log_z = math.log(2 * params.s0 / params.alpha) + 1j * (math.pi / 2 - params.alpha * x)
    return np.exp(2j * script_e * log_z)


# --- sampling, normalization, diagnostics ---------------------------------


def sample(params: PotentialParams, x, n: int = 0, energy: float | None = None,
           script_e: float | None = None, branch: ComplexBranch | None = None) -> WavefunctionSample:
    """Evaluate the variant's eigenfunction on ``x`` and record its provenance."""
    x = np.asarray(x, dtype=float)
    v = params.variant
    if v is Variant.EXPONENTIAL:
        if script_e is None:
            raise DomainError("the exponential variant needs script_e (see q0_pt_eigenvalues)")
        energy = math.sqrt(max(params.m**2 - (params.alpha * script_e) ** 2, 0.0))
        f = functools.partial(eval_q0, params, script_e)
        n = None
    else:
        if energy is None:
            energy = spectra.level(params, n).energy
        if v is Variant.REAL:
            f = functools.partial(eval_real, params, n, energy)
        else:
            if branch is None:
                branch = select_branch(params, n, float(energy)).branch
            f = functools.partial(_eval_complex_branch, params, n, energy, branch=branch)
    return WavefunctionSample(x, np.asarray(f(x), dtype=complex), v, n, energy, 1.0, branch, f)


def normalize(s: WavefunctionSample, require_decay: bool = True) -> WavefunctionSample:
    """Rescale so that the Simpson integral of |psi|^2 over the grid is 1.

    ``require_decay=False`` skips the endpoint-mass guard; the complex
    variants' states are bounded and oscillatory along the real axis, so
    for them the result is a normalization over the sampled window only.
    """
    dens = np.abs(s.values) ** 2
    peak = dens.max()
    if peak == 0:
        raise DomainError("cannot normalize an identically zero wavefunction")
    if require_decay and max(dens[0], dens[-1]) > ENDPOINT_MASS_TOL * peak:
        raise DomainError(
            "grid span insufficient: endpoint |psi|^2 is "
            f"{max(dens[0], dens[-1]) / peak:.3g} of the peak"
        )
    norm = simpson(dens, x=s.x)
    c = 1 / math.sqrt(norm)
    return replace(s, values=s.values * c, normalization=s.normalization * c,
                   evaluator=_scaled(s.evaluator, c))


def _scaled(f, c):
    if f is None:
        return None
    return lambda x: c * f(x)


@dataclass(frozen=True)
class ResidualReport:
    residual: float
    ratio: float | None
    h: float
    degenerate: bool = False


def _uniform_step(x):
    d = np.diff(x)
    h = (x[-1] - x[0]) / (len(x) - 1)
    if np.max(np.abs(d - h)) > 1e-9 * h:
        raise ValueError("ode_residual needs a uniform grid")
    return h


def _grid_residual(params, energy, x, psi):
    h = _uniform_step(x)
    scale = np.max(np.abs(_bracket(params, energy, x)))
    amp = np.max(np.abs(psi))
    if amp == 0:
        return 0.0, h, True
    br = _bracket(params, energy, x[1:-1])
    res = (psi[2:] - 2 * psi[1:-1] + psi[:-2]) / h**2 + br * psi[1:-1]
    return float(np.max(np.abs(res)) / (amp * scale)), h, False


def ode_residual(params: PotentialParams, energy: float, s: WavefunctionSample) -> ResidualReport:
    """Max relative residual of the sampled psi, and its h / (h/2) ratio.

    The residual is max|psi'' + B psi| / (max|psi| * max|B|) over interior
    points, B being the bracket of the KG equation.  The ratio needs the
    sample's evaluator to resample on the half-step grid.
    """
    x = np.asarray(s.x, dtype=float)
    r, h, degenerate = _grid_residual(params, energy, x, np.asarray(s.values))
    if degenerate:
        return ResidualReport(0.0, None, h, True)
    ratio = None
    if s.evaluator is not None:
        xh = np.linspace(x[0], x[-1], 2 * len(x) - 1)
        rh, _, _ = _grid_residual(params, energy, xh, np.asarray(s.evaluator(xh)))
        ratio = r / rh if rh > 0 else math.inf
    return ResidualReport(r, ratio, h)


def count_nodes(values, floor: float = 1e-8) -> int:
    """Sign changes of the phase-aligned real part, ignoring the tails."""
    v = np.asarray(values, dtype=complex)
    k = int(np.argmax(np.abs(v)))
    r = (v * np.exp(-1j * np.angle(v[k]))).real
    keep = np.abs(r) > floor * np.abs(r).max()
    signs = np.sign(r[keep])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def decay_slope(x, values) -> float:
    """Least-squares slope of log|psi| against x."""
    return float(np.polyfit(np.asarray(x, float), np.log(np.abs(values)), 1)[0])


def phase_reality(values) -> float:
    """max |Im(e^{-i theta} psi)| / max|psi| with theta the phase at the peak."""
    v = np.asarray(values, dtype=complex)
    k = int(np.argmax(np.abs(v)))
    aligned = v * np.exp(-1j * np.angle(v[k]))
    return float(np.max(np.abs(aligned.imag)) / np.max(np.abs(v)))
