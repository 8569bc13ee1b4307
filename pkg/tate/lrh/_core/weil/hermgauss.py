"""
tate.lrh._core.weil.hermgauss
=============================
Polynomial × Gaussian functions on ℂ in scaled coordinates.

A HermGaussFn with terms {(a, b): c} stands for

    Σ c · u^a v^b · e^(-(u² + v²)/2),    u = √(2π) x,  v = √(2π) y

so that f_{m,n} = H_m(u) H_n(v) · weight and e^(-π(x²+y²)) is exactly the
weight. Derivatives act through the weight: ∂_u (P·weight) = (∂_u P - uP)·weight.

HermiteExpansion holds the same function in the f_{m,n} basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from tate.lrh._core.exact.scalars import Scalar, coerce, conj, to_mp
from tate.lrh._core.zeta.orthopoly import hermite_poly, monomial_in_hermite

Index = Tuple[int, int]


def _clean(terms: Mapping[Index, object]) -> Dict[Index, Scalar]:
    out: Dict[Index, Scalar] = {}
    for key, c in terms.items():
        c = coerce(c)
        if c != 0:
            out[key] = c
    return out


def _accumulate(out: Dict[Index, Scalar], key: Index, c) -> None:
    out[key] = out.get(key, Fraction(0)) + c


@dataclass(frozen=True)
class HermGaussFn:
    """
    Immutable P(u, v) · e^(-(u²+v²)/2) with ℚ[i] coefficients.

    Attributes:
        terms : (a, b) ↦ coefficient of u^a v^b; zero coefficients dropped.
    """
    terms: Dict[Index, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))

    # ── construction ──────────────────────────────────────────────────────────

    @classmethod
    def zero(cls) -> "HermGaussFn":
        return cls({})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "HermGaussFn":
        return cls({(a, b): c})

    # ── queries ───────────────────────────────────────────────────────────────

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        """max(a + b) over the support; -1 for the zero function."""
        return max((a + b for a, b in self.terms), default=-1)

    def coeff(self, a: int, b: int) -> Scalar:
        return self.terms.get((a, b), Fraction(0))

    # ── linear structure ──────────────────────────────────────────────────────

    def __add__(self, other: "HermGaussFn") -> "HermGaussFn":
        if not isinstance(other, HermGaussFn):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            _accumulate(out, key, c)
        return HermGaussFn(out)

    def __neg__(self) -> "HermGaussFn":
        return HermGaussFn({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "HermGaussFn") -> "HermGaussFn":
        if not isinstance(other, HermGaussFn):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "HermGaussFn":
        """Scalar multiple, or the product of polynomial parts (weight kept once)."""
        if isinstance(other, HermGaussFn):
            out: Dict[Index, Scalar] = {}
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    _accumulate(out, (a1 + a2, b1 + b2), c1 * c2)
            return HermGaussFn(out)
        try:
            c = coerce(other)
        except TypeError:
            return NotImplemented
        return HermGaussFn({key: v * c for key, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermGaussFn):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def conjugate(self) -> "HermGaussFn":
        """Pointwise complex conjugate; the weight is real."""
        return HermGaussFn({key: conj(c) for key, c in self.terms.items()})

    # ── multiplication and weighted derivatives ───────────────────────────────

    def times_u(self) -> "HermGaussFn":
        return HermGaussFn({(a + 1, b): c for (a, b), c in self.terms.items()})

    def times_v(self) -> "HermGaussFn":
        return HermGaussFn({(a, b + 1): c for (a, b), c in self.terms.items()})

    def d_u(self) -> "HermGaussFn":
        """∂/∂u of the weighted function: polynomial part ∂_u P - u P."""
        out: Dict[Index, Scalar] = {}
        for (a, b), c in self.terms.items():
            if a:
                _accumulate(out, (a - 1, b), c * a)
            _accumulate(out, (a + 1, b), -c)
        return HermGaussFn(out)

    def d_v(self) -> "HermGaussFn":
        out: Dict[Index, Scalar] = {}
        for (a, b), c in self.terms.items():
            if b:
                _accumulate(out, (a, b - 1), c * b)
            _accumulate(out, (a, b + 1), -c)
        return HermGaussFn(out)

    def reflect(self) -> "HermGaussFn":
        """f(-z): (u, v) ↦ (-u, -v)."""
        return HermGaussFn(
            {(a, b): (c if (a + b) % 2 == 0 else -c) for (a, b), c in self.terms.items()}
        )

    # ── numerics ──────────────────────────────────────────────────────────────

    def evaluate(self, ctx, x, y):
        """
        Value at z = x + iy (unscaled coordinates) in the mpmath context ctx.
        """
        scale = ctx.sqrt(2 * ctx.pi)
        u, v = scale * x, scale * y
        total = ctx.mpc(0)
        for (a, b), c in self.terms.items():
            total += to_mp(ctx, c) * u ** a * v ** b
        return total * ctx.exp(-(u * u + v * v) / 2)

    def __repr__(self) -> str:
        body = ", ".join(f"u^{a}v^{b}: {c}" for (a, b), c in sorted(self.terms.items()))
        return f"HermGaussFn({{{body}}})"


# ── Hermite basis ─────────────────────────────────────────────────────────────

def hermite_fn(m: int, n: int) -> HermGaussFn:
    """f_{m,n} = H_m(u) H_n(v) · weight."""
    hu, hv = hermite_poly(m), hermite_poly(n)
    return HermGaussFn({
        (a, b): ca * cb
        for a, ca in enumerate(hu.coeffs) if ca != 0
        for b, cb in enumerate(hv.coeffs) if cb != 0
    })


@dataclass(frozen=True)
class HermiteExpansion:
    """
    Attributes:
        terms : (m, n) ↦ coefficient of f_{m,n}; zero coefficients dropped.
    """
    terms: Dict[Index, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> frozenset:
        return frozenset(self.terms)

    def coeff(self, m: int, n: int) -> Scalar:
        return self.terms.get((m, n), Fraction(0))

    def scale_each(self, factor) -> "HermiteExpansion":
        """Multiply the (m, n) coefficient by factor(m, n)."""
        return HermiteExpansion({key: c * factor(*key) for key, c in self.terms.items()})

    def to_function(self) -> HermGaussFn:
        out = HermGaussFn.zero()
        for (m, n), c in self.terms.items():
            out = out + hermite_fn(m, n) * c
        return out

    def __sub__(self, other: "HermiteExpansion") -> "HermiteExpansion":
        out = dict(self.terms)
        for key, c in other.terms.items():
            _accumulate(out, key, -c)
        return HermiteExpansion(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermiteExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})f_{{{m},{n}}}" for (m, n), c in sorted(self.terms.items()))


def expand_in_hermite(f: HermGaussFn) -> HermiteExpansion:
    """Exact change of basis u^a v^b ↦ Σ e_i e_j f_{i,j}."""
    out: Dict[Index, Scalar] = {}
    for (a, b), c in f.terms.items():
        for i, ei in monomial_in_hermite(a).items():
            for j, ej in monomial_in_hermite(b).items():
                _accumulate(out, (i, j), c * ei * ej)
    return HermiteExpansion(out)


def expansion_of(terms: Iterable[Tuple[Index, object]]) -> HermiteExpansion:
    return HermiteExpansion(dict(terms))
