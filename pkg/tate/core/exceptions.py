"""
tate.core.exceptions
====================
All custom exceptions for the tatezeta verification suite.
"""


class TateBaseError(Exception):
    """Base class for all tatezeta exceptions."""
    def __init__(self, message: str, details: dict = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            detail_str = ", ".join(f"{k}={v!r}" for k, v in self.details.items())
            return f"{self.message} [{detail_str}]"
        return self.message


class ConfigError(TateBaseError):
    """
    Raised when a run configuration is invalid, missing required fields,
    or contains unsupported values.
    """
    pass


class DomainError(TateBaseError):
    """
    Raised when an operation is called outside its domain.

    Examples: b_{m,n} with |n| > m or m - |n| odd, the recurrence route
    for a vacuous (m, k) pair, zeta integrals with Re(s) <= 0.
    """
    pass


class NonRealRestrictionError(TateBaseError):
    """
    Raised when (-i)^d * p(1/2 + it) has a coefficient with nonzero
    imaginary part, i.e. p violates the critical-line symmetry.
    """
    pass


class EndpointRootError(TateBaseError):
    """Raised when a Sturm interval endpoint is itself a root."""
    pass


class DegenerateEigenspaceError(TateBaseError):
    """
    Raised when the eigenspace of the shift operator for eigenvalue m+1
    is not one-dimensional. The eigenvalue is simple, so this always
    points at an arithmetic bug.
    """
    pass


class IdentityViolatedError(TateBaseError):
    """
    Raised when an exact identity fails.
    details["residual"] holds a printable form of the nonzero residual.
    """
    pass


class PoleProximityError(TateBaseError):
    """Raised when Gamma is requested too close to a pole."""
    pass


class NonConvergentError(TateBaseError):
    """Raised when quadrature misses its tolerance within the budget."""
    pass


class NoConvergenceError(TateBaseError):
    """Raised when the simultaneous root iteration exhausts its budget."""
    pass


class PropertyViolatedError(TateBaseError):
    """
    Raised by property harnesses. details["counterexample"] holds a
    JSON-serializable description of the failing instance.
    """
    pass


class ReportError(TateBaseError):
    """Raised when a report or table cannot be written."""
    pass
