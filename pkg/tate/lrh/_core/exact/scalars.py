"""
tate.lrh._core.exact.scalars
============================
Exact scalars: BigRational (ℚ) and GaussianRational (ℚ[i]).

BigRational is fractions.Fraction: always reduced, positive denominator.
GaussianRational is a frozen value type; whenever a result has zero
imaginary part, coerce() collapses it back to a plain Fraction so that
real computations never pay for the complex wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import regex

from tate.core.exceptions import DomainError

BigRational = Fraction

_RATIONAL_RE = regex.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class GaussianRational:
    """
    An element re + i·im of ℚ[i].

    Arithmetic accepts ints, Fractions and GaussianRationals on either
    side. Conjugation is an involution; division by zero raises
    ZeroDivisionError like Fraction does.
    """
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    # ── construction ──────────────────────────────────────────────────────────

    @classmethod
    def of(cls, value: "Scalar") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value), Fraction(0))
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    # ── queries ───────────────────────────────────────────────────────────────

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|² — always rational."""
        return self.re * self.re + self.im * self.im

    # ── arithmetic ────────────────────────────────────────────────────────────

    def __add__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / (self ** (-exponent))
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = _lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __repr__(self) -> str:
        return f"GaussianRational({format_rational(self.re)}, {format_rational(self.im)})"

    def __str__(self) -> str:
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"({format_rational(self.re)}{sign}{format_rational(abs(self.im))}i)"


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


def _lift(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value), Fraction(0))
    return NotImplemented


# ── Helpers ───────────────────────────────────────────────────────────────────

def coerce(value) -> Scalar:
    """
    Canonical scalar form: Fraction when real, GaussianRational otherwise.
    """
    if isinstance(value, GaussianRational):
        return value.re if value.im == 0 else value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def conj(value: Scalar) -> Scalar:
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return value


def is_real(value: Scalar) -> bool:
    return not isinstance(value, GaussianRational) or value.im == 0


def real_part(value: Scalar) -> Fraction:
    return value.re if isinstance(value, GaussianRational) else Fraction(value)


def imag_part(value: Scalar) -> Fraction:
    return value.im if isinstance(value, GaussianRational) else Fraction(0)


def i_power(n: int) -> Scalar:
    """Exact i**n for any integer n."""
    return coerce((Fraction(1), I, Fraction(-1), -I)[n % 4])


def parse_rational(text: str) -> Fraction:
    """Parse "num" or "num/den" into a Fraction."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise DomainError(f"Not a rational literal: {text!r}", details={"text": text})
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"Zero denominator in {text!r}", details={"text": text})
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Canonical "num/den" form ("num" when the denominator is 1)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def to_mp(ctx, value: Scalar):
    """Image of an exact scalar in the mpmath context ctx (mpf when real, else mpc)."""
    re, im = real_part(value), imag_part(value)
    re_mp = ctx.mpf(re.numerator) / re.denominator
    if im == 0:
        return re_mp
    return ctx.mpc(re_mp, ctx.mpf(im.numerator) / im.denominator)
