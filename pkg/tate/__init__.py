"""
tatezeta
========
Local Tate zeta polynomials for the Weil representation of SU(2, ℂ):
exact construction, a per-instance certificate that every zero lies on
Re(s) = 1/2, and the operator identities and numerics behind it.
"""

__version__ = "1.0.0"
__author__ = "tatezeta"

# Lazy import to avoid circular dependencies
def __getattr__(name):
    if name == "LocalRHVerifier":
        from tate.lrh import LocalRHVerifier
        return LocalRHVerifier
    raise AttributeError(f"module 'tate' has no attribute {name!r}")


__all__ = [
    "__version__",
]
