"""Exception types raised across the package."""


class HulthenError(Exception):
    """Base class for all package errors."""


class DomainError(HulthenError, ValueError):
    """Evaluation requested outside the region where a formula is defined."""


class NoBoundStateError(HulthenError):
    """The requested level does not exist for the given parameters."""


class PoleError(DomainError):
    """A formula divides by an exact (or numerically exact) zero."""


class ConvergenceError(HulthenError):
    """An iterative procedure did not converge.

    ``partial`` carries whatever was accumulated before giving up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class BranchError(HulthenError):
    """No admissible branch exists in the Nikiforov-Uvarov reduction."""
