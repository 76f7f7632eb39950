"""Klein-Gordon bound states of the generalized Hulthen potential and its complex variants."""

from .errors import (
    BranchError,
    ConvergenceError,
    DomainError,
    HulthenError,
    NoBoundStateError,
    PoleError,
)
from .model import PotentialParams, Variant
from .spectra import count_real_levels, level, pseudo_level, pt_level, q0_pt_eigenvalues, real_hulthen_level

__all__ = [
    "BranchError",
    "ConvergenceError",
    "DomainError",
    "HulthenError",
    "NoBoundStateError",
    "PoleError",
    "PotentialParams",
    "Variant",
    "count_real_levels",
    "level",
    "pseudo_level",
    "pt_level",
    "q0_pt_eigenvalues",
    "real_hulthen_level",
]
