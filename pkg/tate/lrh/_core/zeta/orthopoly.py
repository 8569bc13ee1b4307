"""
tate.lrh._core.zeta.orthopoly
=============================
Hermite and Laguerre polynomials and the cosine power reduction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict

from tate.core.exceptions import DomainError
from tate.lrh._core.exact.unipoly import UniPoly


@lru_cache(maxsize=None)
def hermite_poly(m: int, var: str = "x") -> UniPoly:
    """
    Physicists' Hermite polynomial H_m via H_(n+1) = 2x·H_n - 2n·H_(n-1).

    Integer coefficients; H_m has the parity of m.
    """
    if m < 0:
        raise DomainError("hermite_poly needs m >= 0", details={"m": m})
    x2 = UniPoly.monomial(1, 2, var)
    prev, cur = UniPoly.zero(var), UniPoly.constant(1, var)
    for n in range(m):
        prev, cur = cur, x2 * cur - prev * (2 * n)
    return cur


@lru_cache(maxsize=None)
def laguerre_poly(n: int, alpha: int, var: str = "x") -> UniPoly:
    """
    Generalized Laguerre polynomial
        L_n^(α)(x) = Σ_j (-1)^j C(n+α, n-j) x^j / j!
    (the expanded Rodrigues formula); leading coefficient (-1)^n / n!.
    """
    if n < 0 or alpha < 0:
        raise DomainError("laguerre_poly needs n, alpha >= 0", details={"n": n, "alpha": alpha})
    return UniPoly.from_coeffs(
        (Fraction((-1) ** j * comb(n + alpha, n - j), factorial(j)) for j in range(n + 1)),
        var,
    )


@lru_cache(maxsize=None)
def _cos_power(n: int) -> tuple:
    half = Fraction(1, 2 ** n)
    out = []
    for j in range(n % 2, n + 1, 2):
        c = comb(n, (n - j) // 2) * half
        out.append((j, c if j == 0 else 2 * c))
    return tuple(out)


def cos_power_expand(n: int) -> Dict[int, Fraction]:
    """
    Coefficients c_j with cos^n θ = Σ_j c_j cos(jθ), j ∈ {n mod 2, …, n}.
    """
    if n < 0:
        raise DomainError("cos_power_expand needs n >= 0", details={"n": n})
    return dict(_cos_power(n))


@lru_cache(maxsize=None)
def monomial_in_hermite(n: int) -> Dict[int, Fraction]:
    """
    x^n = Σ_j e_j H_j(x), with
        x^n = n!/2^n Σ_{i ≤ n/2} H_(n-2i)(x) / (i! (n-2i)!).
    """
    scale = Fraction(factorial(n), 2 ** n)
    return {
        n - 2 * i: scale / (factorial(i) * factorial(n - 2 * i))
        for i in range(n // 2 + 1)
    }
