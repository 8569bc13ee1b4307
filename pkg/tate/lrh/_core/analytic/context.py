"""
tate.lrh._core.analytic.context
===============================
Per-worker numeric state: an independent mpmath context at a fixed
binary precision (default 128 bits).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

from mpmath.ctx_mp import MPContext

from tate.core.exceptions import ConfigError
from tate.lrh._core.exact.scalars import GaussianRational, Scalar, to_mp
from tate.lrh._core.exact.unipoly import UniPoly

DEFAULT_PRECISION_BITS = 128


class NumericContext:
    """
    Owns one mpmath MPContext. Contexts are never shared between workers;
    each process builds its own from the run configuration.
    Weight moments computed in the context are kept on it, keyed by k.

    Usage
    -----
    nctx = NumericContext(precision_bits=128)
    mp = nctx.mp
    value = nctx.eval_poly(p, mp.mpc(0.5, 2))
    """

    def __init__(self, precision_bits: int = DEFAULT_PRECISION_BITS):
        if precision_bits < 64:
            raise ConfigError(
                "precision_bits must be at least 64",
                details={"precision_bits": precision_bits},
            )
        self.precision_bits = precision_bits
        self.mp = MPContext()
        self.mp.prec = precision_bits
        self.moment_cache: Dict[int, List] = {}

    def to_mp(self, value: Scalar):
        return to_mp(self.mp, value)

    def parse(self, value):
        """Accept exact scalars, Python numbers, strings or mpmath values."""
        if isinstance(value, (int, Fraction, GaussianRational)):
            return to_mp(self.mp, value)
        if isinstance(value, complex):
            return self.mp.mpc(value.real, value.imag)
        if isinstance(value, str):
            return self.mp.mpmathify(value)
        return self.mp.convert(value)

    def eval_poly(self, p: UniPoly, x):
        """Horner evaluation of an exact polynomial at a numeric point."""
        acc = self.mp.mpf(0)
        for c in reversed(p.coeffs):
            acc = acc * x + self.to_mp(c)
        return acc

    def doubled(self) -> "NumericContext":
        return NumericContext(self.precision_bits * 2)

    def __repr__(self) -> str:
        return f"NumericContext(precision_bits={self.precision_bits})"
