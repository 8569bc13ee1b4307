"""
tate.lrh._core.exact.unipoly
============================
Dense univariate polynomials with exact ℚ / ℚ[i] coefficients.

Coefficients are stored ascending (coeffs[j] multiplies var**j) and the
highest stored coefficient is nonzero unless the polynomial is zero.
Carrier of p_m^(k), the Hermite and Laguerre polynomials, the shifted
q_m^(k) and the Sturm remainders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple

from tate.core.exceptions import DomainError, NonRealRestrictionError
from tate.lrh._core.exact.scalars import (
    I,
    Scalar,
    coerce,
    format_rational,
    i_power,
    imag_part,
    is_real,
    real_part,
)


def _strip(coeffs: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    out = [coerce(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class UniPoly:
    """
    Immutable dense polynomial.

    Attributes:
        coeffs : ascending coefficients (Fraction or GaussianRational).
        var    : variable tag used for printing ("s", "t", "x", "w").
    """
    coeffs: Tuple[Scalar, ...] = ()
    var:    str = "s"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    # ── construction ──────────────────────────────────────────────────────────

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, var: str = "s") -> "UniPoly":
        return cls(tuple(coeffs), var)

    @classmethod
    def zero(cls, var: str = "s") -> "UniPoly":
        return cls((), var)

    @classmethod
    def constant(cls, c, var: str = "s") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, n: int, c=1, var: str = "s") -> "UniPoly":
        return cls((0,) * n + (c,), var)

    @classmethod
    def identity(cls, var: str = "s") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def linear(cls, a, b, var: str = "s") -> "UniPoly":
        """a·var + b."""
        return cls((b, a), var)

    # ── queries ───────────────────────────────────────────────────────────────

    @property
    def degree(self) -> int:
        """len(coeffs) - 1; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_real(self) -> bool:
        return all(is_real(c) for c in self.coeffs)

    def coeff(self, j: int) -> Scalar:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    # ── arithmetic ────────────────────────────────────────────────────────────

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            tuple(self.coeff(j) + other.coeff(j) for j in range(n)), self.var
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            try:
                c = coerce(other)
            except TypeError:
                return NotImplemented
            return UniPoly(tuple(a * c for a in self.coeffs), self.var)
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(tuple(out), self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = UniPoly.constant(1, self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UniPoly.constant(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        try:
            return UniPoly.constant(coerce(other), self.var)
        except TypeError:
            return NotImplemented

    # ── evaluation and calculus ───────────────────────────────────────────────

    def __call__(self, x):
        """Horner evaluation; x may be exact or any type closed under + and *."""
        acc = Fraction(0) if not self.coeffs else None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(
            tuple(j * self.coeffs[j] for j in range(1, len(self.coeffs))), self.var
        )

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(var)); the result takes inner's variable tag."""
        result = UniPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def conjugate(self) -> "UniPoly":
        return UniPoly(
            tuple(c.conjugate() if not is_real(c) else c for c in self.coeffs),
            self.var,
        )

    # ── division ──────────────────────────────────────────────────────────────

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """Euclidean division: self = q·divisor + r with deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd]
            if c == 0:
                continue
            factor = coerce(c / lead)
            quot[shift] = factor
            for j, b in enumerate(divisor.coeffs):
                rem[shift + j] = rem[shift + j] - factor * b
        return UniPoly(tuple(quot), self.var), UniPoly(tuple(rem[:dd] if dd > 0 else ()), self.var)

    def __mod__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self * coerce(Fraction(1) / self.leading)

    # ── normalization ─────────────────────────────────────────────────────────

    def primitive(self) -> "UniPoly":
        """
        Primitive integer form with positive leading coefficient.

        Requires rational coefficients. The zero polynomial is returned
        unchanged.
        """
        if self.is_zero:
            return self
        if not self.is_real:
            raise DomainError(
                "primitive() needs rational coefficients",
                details={"poly": str(self)},
            )
        fracs = [Fraction(c) for c in self.coeffs]
        den = reduce(lcm, (f.denominator for f in fracs), 1)
        ints = [f.numerator * (den // f.denominator) for f in fracs]
        content = reduce(gcd, (abs(n) for n in ints), 0)
        sign = 1 if ints[-1] > 0 else -1
        return UniPoly(tuple(Fraction(sign * n, content) for n in ints), self.var)

    def positive_scaled(self) -> "UniPoly":
        """
        Same polynomial times a positive rational making it primitive over ℤ.
        Preserves every sign, unlike primitive().
        """
        if self.is_zero:
            return self
        p = self.primitive()
        if (self.leading > 0) != (p.leading > 0):
            return -p
        return p

    # ── printing ──────────────────────────────────────────────────────────────

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            if is_real(c):
                q = Fraction(c)
                sign = "-" if q < 0 else "+"
                mag = abs(q)
                body = format_rational(mag)
            else:
                sign, body = "+", str(c)
            if j == 0:
                term = body
            else:
                mono = self.var if j == 1 else f"{self.var}^{j}"
                term = mono if body == "1" else f"{body}{mono}"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        out = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __repr__(self) -> str:
        return f"UniPoly({self}, var={self.var!r})"


# ── Polynomial gcd ────────────────────────────────────────────────────────────

def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm (zero only when both are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


# ── Shift and critical line ───────────────────────────────────────────────────

def poly_shift(p: UniPoly, delta) -> UniPoly:
    """Return p(var + delta) exactly; degree is preserved."""
    return p.compose(UniPoly.linear(1, coerce(delta), p.var))


def critical_line_restriction(p: UniPoly, d: int) -> UniPoly:
    """
    ρ(t) = (-i)^d · p(1/2 + i·t), as a polynomial in t.

    For p satisfying p(1-s) = (-1)^d p(s) every coefficient of ρ is real;
    any imaginary residue raises NonRealRestrictionError. With positive
    leading coefficient c_d of p, ρ has the same leading coefficient.
    """
    if not p.is_real:
        raise DomainError(
            "critical_line_restriction needs rational coefficients",
            details={"poly": str(p)},
        )
    if not p.is_zero and p.degree != d:
        raise DomainError(
            f"degree mismatch: deg p = {p.degree}, d = {d}",
            details={"poly": str(p), "d": d},
        )
    on_line = p.compose(UniPoly.linear(I, Fraction(1, 2), "t"))
    rho = on_line * i_power(-d)
    bad = [j for j, c in enumerate(rho.coeffs) if imag_part(c) != 0]
    if bad:
        raise NonRealRestrictionError(
            "critical-line restriction has non-real coefficients",
            details={"poly": str(p), "indices": bad},
        )
    return UniPoly(tuple(real_part(c) for c in rho.coeffs), "t")


def critical_line_lift(rho: UniPoly, d: int) -> UniPoly:
    """Inverse of critical_line_restriction: p(s) = i^d · ρ(-i(s - 1/2))."""
    inner = UniPoly.linear(-I, I * Fraction(1, 2), "s")
    return rho.compose(inner) * i_power(d)
