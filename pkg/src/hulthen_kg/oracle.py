"""Finite-difference check of the real-variant spectrum.

The scalar KG equation for the real potential is the Sturm-Liouville problem

    -psi'' + W(x) psi = Lambda psi,   W = S^2 + 2 m S,   Lambda = E^2 - m^2,

discretized with the 3-point Laplacian and Dirichlet ends.  Eigenvalues
come from Sturm-sequence counting plus bisection, so nothing here depends
on the closed-form derivation it is meant to check.
"""

from __future__ import annotations

import math
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DomainError, NoBoundStateError, PoleError
from .model import PotentialParams, Variant, real_potential
from .spectra import count_real_levels, left_decay_exponent, real_hulthen_level

DEFAULT_POINTS = (8000, 16000)
POLE_OFFSET = 1e-3
RATIO_WINDOW = (2.5, 6.0)
EIG_RTOL = 1e-13


@dataclass(frozen=True)
class Grid:
    """Interior nodes x_left + k h, k = 1..n_points, with h = span/(n_points + 1)."""

    x_left: float
    x_right: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 3:
            raise ValueError(f"n_points must be >= 3, got {self.n_points}")
        if not self.x_right > self.x_left:
            raise ValueError("x_right must exceed x_left")

    @property
    def h(self) -> float:
        return (self.x_right - self.x_left) / (self.n_points + 1)

    @property
    def span(self) -> float:
        return self.x_right - self.x_left

    def nodes(self) -> np.ndarray:
        return self.x_left + self.h * np.arange(1, self.n_points + 1)


@dataclass(frozen=True)
class TridiagonalOperator:
    diag: np.ndarray
    off: float
    h: float

    @property
    def size(self) -> int:
        return len(self.diag)

    def dense(self) -> np.ndarray:
        n = self.size
        a = np.diag(self.diag)
        idx = np.arange(n - 1)
        a[idx, idx + 1] = self.off
        a[idx + 1, idx] = self.off
        return a

    def gershgorin(self) -> tuple[float, float]:
        r = 2 * abs(self.off)
        return float(self.diag.min()) - r, float(self.diag.max()) + r


def operator_from_potential(grid: Grid, w) -> TridiagonalOperator:
    w = np.asarray(w, dtype=float)
    if w.shape != (grid.n_points,):
        raise ValueError("potential must be sampled at the interior nodes")
    h2 = grid.h**2
    return TridiagonalOperator(w + 2.0 / h2, -1.0 / h2, grid.h)


def free_operator(grid: Grid) -> TridiagonalOperator:
    return operator_from_potential(grid, np.zeros(grid.n_points))


def effective_potential(params: PotentialParams, x):
    s = real_potential(params, x)
    return s * s + 2 * params.m * s


def discretize(params: PotentialParams, grid: Grid) -> TridiagonalOperator:
    if params.variant is not Variant.REAL:
        raise DomainError("the finite-difference oracle handles the real variant only")
    pole = params.pole
    if pole is not None and grid.x_left <= pole:
        raise PoleError(f"grid [{grid.x_left:g}, {grid.x_right:g}] contains the pole at x = {pole:.12g}")
    return operator_from_potential(grid, effective_potential(params, grid.nodes()))


def sturm_count(op: TridiagonalOperator, lam: float) -> int:
    """Number of eigenvalues strictly below ``lam`` (LDL^T inertia)."""
    b2 = op.off * op.off
    tiny = sys.float_info.min
    diag = op.diag.tolist()
    count = 0
    d = diag[0] - lam
    for i, a in enumerate(diag):
        if i:
            d = a - lam - b2 / d
        if d == 0.0:
            d = -tiny
        if d < 0:
            count += 1
    return count


def lowest_eigenvalues(op: TridiagonalOperator, count: int, rtol: float = EIG_RTOL) -> list[float]:
    """The ``count`` smallest eigenvalues, ascending, by bisection.

    Each eigenvalue is bracketed until the interval is below
    ``rtol * max(1, |lambda|)`` or cannot shrink further in floating point.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if count > op.size:
        raise ValueError(f"asked for {count} eigenvalues of a {op.size}x{op.size} operator")
    lo0, hi0 = op.gershgorin()
    out = []
    for k in range(1, count + 1):
        lo = out[-1] if out else lo0
        lo = min(lo, lo0)
        hi = hi0
        while True:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi or hi - lo <= rtol * max(1.0, abs(mid)):
                break
            if sturm_count(op, mid) >= k:
                hi = mid
            else:
                lo = mid
        out.append(0.5 * (lo + hi))
    return out


def count_below(op: TridiagonalOperator, lam: float = 0.0) -> int:
    return sturm_count(op, lam)


def continuum_threshold(params: PotentialParams) -> float:
    """Bottom of the continuum, min W(+-inf); W(-inf) is finite only for q < 0."""
    if params.q > 0:
        return 0.0
    s = params.s0 / params.q
    return min(0.0, s * s + 2 * params.m * s)


def count_bound(params: PotentialParams, grid: Grid) -> int:
    """Number of FD eigenvalues below the continuum threshold."""
    return count_below(discretize(params, grid), continuum_threshold(params))


# --- closed-form verification ----------------------------------------------


def default_domain(params: PotentialParams, n: int, delta: float = POLE_OFFSET) -> tuple[float, float]:
    """Interval wide enough that the level-n state has decayed at both ends."""
    lvl = real_hulthen_level(params, n)
    al, eps = params.alpha, lvl.epsilon
    right = max(80.0, 40.0 / (al * eps))
    if params.q > 0:
        pole = params.pole
        return pole + delta, pole + right
    p = abs(left_decay_exponent(params, n, eps))
    return -max(60.0, 40.0 / (al * p)), right


@dataclass
class VerifyReport:
    params: dict
    n: int
    lambda_h: float
    lambda_h2: float
    lambda_fd: float
    lambda_closed: float
    abs_diff: float
    rel_diff: float
    convergence_ratio: float
    converged: bool
    status: str
    delta_sensitivity: float | None
    grid: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _params_dict(params: PotentialParams) -> dict:
    return dict(m=params.m, alpha=params.alpha, s0=params.s0, q=params.q, variant=params.variant.value)


def fd_eigenvalue(params: PotentialParams, grid: Grid, n: int) -> float:
    return lowest_eigenvalues(discretize(params, grid), n + 1)[n]


def verify_closed_form(
    params: PotentialParams,
    n: int = 0,
    points: tuple[int, int] = DEFAULT_POINTS,
    domain: tuple[float, float] | None = None,
    delta: float = POLE_OFFSET,
) -> VerifyReport:
    """Compare the FD eigenvalue (two grids, Richardson) with E_n^2 - m^2."""
    _, valid = count_real_levels(params)
    if n not in valid:
        raise NoBoundStateError(f"level n = {n} does not exist for these parameters")
    lvl = real_hulthen_level(params, n)
    lam_closed = lvl.energy**2 - params.m**2
    if domain is None:
        domain = default_domain(params, n, delta)
    xl, xr = domain
    coarse, fine = Grid(xl, xr, points[0]), Grid(xl, xr, points[1])
    lam_h = fd_eigenvalue(params, coarse, n)
    lam_h2 = fd_eigenvalue(params, fine, n)
    r2 = (coarse.h / fine.h) ** 2
    lam_fd = (r2 * lam_h2 - lam_h) / (r2 - 1)
    den = lam_h2 - lam_closed
    ratio = (lam_h - lam_closed) / den if den != 0 else math.inf
    converged = RATIO_WINDOW[0] <= ratio <= RATIO_WINDOW[1]

    sens = None
    if params.q > 0:
        shifted = Grid(xl + delta, xr, points[1])
        sens = abs(fd_eigenvalue(params, shifted, n) - lam_h2)

    abs_diff = abs(lam_fd - lam_closed)
    return VerifyReport(
        params=_params_dict(params),
        n=n,
        lambda_h=lam_h,
        lambda_h2=lam_h2,
        lambda_fd=lam_fd,
        lambda_closed=lam_closed,
        abs_diff=abs_diff,
        rel_diff=abs_diff / abs(lam_closed),
        convergence_ratio=ratio,
        converged=converged,
        status="ok" if converged else "unconverged",
        delta_sensitivity=sens,
        grid=dict(x_left=xl, x_right=xr, n_points=list(points), h=[coarse.h, fine.h]),
    )
