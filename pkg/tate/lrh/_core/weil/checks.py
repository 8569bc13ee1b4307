"""
tate.lrh._core.weil.checks
==========================
Exact identity checks for the Lie-algebra action on the Hermite–Gaussian
space: ladder formulas, brackets, Fourier intertwining, the b_{m,n}
eigenbasis, invariance and irreducibility of W_m, the pairings, and the
harmonic oscillator.

Every *_check returns True or raises IdentityViolatedError with the
offending residual in details["residual"].
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, Iterator, List, Tuple

import sympy as sp

from tate.core.exceptions import DomainError, IdentityViolatedError
from tate.lrh._core.exact.linalg import EchelonBasis
from tate.lrh._core.exact.scalars import I, Scalar, coerce
from tate.lrh._core.weil.bmn import bmn_fn, w_basis
from tate.lrh._core.weil.fourier import fourier_transform, inverse_fourier_transform
from tate.lrh._core.weil.generators import (
    SU2Generator,
    apply_combination,
    apply_generator,
    decompose_su2,
    differential_part,
    harmonic_oscillator,
    matrix_bracket,
    multiplication_part,
)
from tate.lrh._core.weil.hermgauss import (
    HermGaussFn,
    HermiteExpansion,
    expand_in_hermite,
    hermite_fn,
)

GENERATORS = (SU2Generator.J, SU2Generator.K, SU2Generator.R)


def basis_indices(degree_bound: int) -> Iterator[Tuple[int, int]]:
    """All (m, n) with m + n <= degree_bound; (d+1)(d+2)/2 of them."""
    for total in range(degree_bound + 1):
        for m in range(total, -1, -1):
            yield m, total - m


def _fail(message: str, residual, **details) -> None:
    raise IdentityViolatedError(message, details={**details, "residual": str(residual)})


def _require_equal(lhs: HermGaussFn, rhs: HermGaussFn, message: str, **details) -> bool:
    diff = lhs - rhs
    if not diff.is_zero:
        _fail(message, expand_in_hermite(diff), **details)
    return True


# ── Ladder identities ─────────────────────────────────────────────────────────

def ladder_expected(x: SU2Generator, m: int, n: int) -> HermiteExpansion:
    """
    J f_{m,n} = i(m-n) f_{m,n}
    R f_{m,n} = n f_{m+1,n-1} - m f_{m-1,n+1}
    K f_{m,n} = -in f_{m+1,n-1} - im f_{m-1,n+1}
    """
    if x is SU2Generator.J:
        return HermiteExpansion({(m, n): I * (m - n)})
    terms: Dict[Tuple[int, int], Scalar] = {}
    if n > 0:
        terms[(m + 1, n - 1)] = coerce(n) if x is SU2Generator.R else -I * n
    if m > 0:
        terms[(m - 1, n + 1)] = coerce(-m) if x is SU2Generator.R else -I * m
    return HermiteExpansion(terms)


def ladder_check(m: int, n: int) -> bool:
    """All three ladder identities on f_{m,n}, by expansion and Hermite re-expansion."""
    f = hermite_fn(m, n)
    for x in GENERATORS:
        got = expand_in_hermite(apply_generator(x, f))
        want = ladder_expected(x, m, n)
        if got != want:
            _fail("ladder identity fails", got - want, generator=x.value, m=m, n=n)
    return True


# ── Brackets ──────────────────────────────────────────────────────────────────

def commutator_check(x: SU2Generator, y: SU2Generator, degree_bound: int) -> bool:
    """[dω X, dω Y] f = dω([X, Y]) f on every f_{m,n} with m + n <= degree_bound."""
    coords = decompose_su2(matrix_bracket(x, y))
    for m, n in basis_indices(degree_bound):
        f = hermite_fn(m, n)
        lhs = apply_generator(x, apply_generator(y, f)) - apply_generator(y, apply_generator(x, f))
        _require_equal(
            lhs, apply_combination(coords, f), "bracket relation fails",
            pair=f"[{x.value},{y.value}]", m=m, n=n,
        )
    return True


# ── Fourier intertwining ──────────────────────────────────────────────────────

def _conjugated(op, f: HermGaussFn) -> HermGaussFn:
    return inverse_fourier_transform(op(fourier_transform(f)))


def intertwining_check(degree_bound: int) -> bool:
    """
    Conjugating multiplication by the Fourier transform gives differentiation
    on every f_{m,n} with m + n <= degree_bound:

        F⁻¹ u F = i ∂_u,   F⁻¹ v F = -i ∂_v,
        F⁻¹ (i/2)(u² - v²) F = -(i/2)(∂_u² - ∂_v²),
        F⁻¹ (uv) F = ∂_u ∂_v.

    The mixed identity puts the multiplication part of dω(K) onto minus its
    differential part, because the kernel flips the sign in y.
    """
    cases = (
        ("u", lambda g: g.times_u(), lambda g: g.d_u() * I),
        ("v", lambda g: g.times_v(), lambda g: g.d_v() * (-I)),
        ("J", lambda g: multiplication_part(SU2Generator.J, g),
              lambda g: differential_part(SU2Generator.J, g)),
        ("K", lambda g: multiplication_part(SU2Generator.K, g),
              lambda g: -differential_part(SU2Generator.K, g)),
    )
    for m, n in basis_indices(degree_bound):
        f = hermite_fn(m, n)
        for name, mult, diff in cases:
            _require_equal(
                _conjugated(mult, f), diff(f), "Fourier intertwining fails",
                operator=name, m=m, n=n,
            )
    return True


def fourier_order_check(f: HermGaussFn) -> bool:
    """F² f = f(-z) and F⁴ f = f."""
    twice = fourier_transform(fourier_transform(f))
    _require_equal(twice, f.reflect(), "double transform is not the reflection")
    _require_equal(fourier_transform(fourier_transform(twice)), f, "fourth power is not the identity")
    return True


# ── The eigenbasis b_{m,n} and the subspaces W_m ─────────────────────────────

def rotation_eigen_check(m: int, n: int) -> bool:
    """dω(R) b_{m,n} = i·n·b_{m,n}."""
    b = bmn_fn(m, n)
    return _require_equal(
        apply_generator(SU2Generator.R, b), b * (I * n),
        "b_{m,n} is not a rotation eigenfunction", m=m, n=n,
    )


def in_w(expansion: HermiteExpansion, m: int) -> bool:
    return all(a + b == m for a, b in expansion.support)


def w_coordinates(f: HermGaussFn, m: int) -> List[Scalar]:
    """Coordinates of f ∈ W_m in the basis f_{j,m-j}, j = 0..m."""
    expansion = expand_in_hermite(f)
    if not in_w(expansion, m):
        _fail("function leaves W_m", expansion, m=m)
    return [expansion.coeff(j, m - j) for j in range(m + 1)]


def membership_check(m: int, n: int) -> bool:
    """b_{m,n} lies in W_m = span{f_{j,m-j}}."""
    expansion = expand_in_hermite(bmn_fn(m, n))
    if not in_w(expansion, m):
        _fail("b_{m,n} is not in W_m", expansion, m=m, n=n)
    return True


def subspace_invariance_check(m: int) -> bool:
    """Every generator maps every f_{j,m-j} back into W_m."""
    for j in range(m + 1):
        f = hermite_fn(j, m - j)
        for x in GENERATORS:
            image = expand_in_hermite(apply_generator(x, f))
            if not in_w(image, m):
                _fail("W_m is not invariant", image, generator=x.value, m=m, j=j)
    return True


def irreducibility_check(m: int) -> bool:
    """
    Each b_{m,n} generates all of W_m under J, K, R, so W_m has no proper
    invariant subspace.
    """
    for n in w_basis(m):
        span = EchelonBasis(m + 1)
        start = bmn_fn(m, n)
        span.add(w_coordinates(start, m))
        frontier = [start]
        while frontier and span.dimension < m + 1:
            grown = []
            for f in frontier:
                for x in GENERATORS:
                    g = apply_generator(x, f)
                    if span.add(w_coordinates(g, m)):
                        grown.append(g)
            frontier = grown
        if span.dimension != m + 1:
            _fail(
                "cyclic span of b_{m,n} is a proper subspace",
                f"dimension {span.dimension} of {m + 1}", m=m, n=n,
            )
    return True


# ── Pairings ──────────────────────────────────────────────────────────────────

@lru_cache(maxsize=None)
def _moment(a: int) -> Fraction:
    """∫ u^a e^(-u²) du / √π: (a-1)!!/2^(a/2) for even a, 0 for odd."""
    if a % 2:
        return Fraction(0)
    return Fraction(prod(range(a - 1, 0, -2)), 2 ** (a // 2))


def inner_product(f: HermGaussFn, g: HermGaussFn) -> Scalar:
    """
    Bilinear ⟨f, g⟩ = ∫ f g dz, with dz = du dv / 2π.

    Gaussian moments make the value exact; it is rational for real inputs.
    """
    total = Fraction(0)
    for (a, b), c in (f * g).terms.items():
        if a % 2 or b % 2:
            continue
        total = total + c * _moment(a) * _moment(b)
    return coerce(total * Fraction(1, 2))


def hermitian_product(f: HermGaussFn, g: HermGaussFn) -> Scalar:
    """⟨f, conj(g)⟩ = ∫ f ḡ dz."""
    return inner_product(f, g.conjugate())


def subspace_orthogonality_check(m: int, m2: int) -> bool:
    """⟨conj(b), b′⟩ = 0 for every b in the b-basis of W_m and b′ of W_m2, m != m2."""
    if m == m2:
        raise DomainError("subspace_orthogonality_check needs m != m2", details={"m": m})
    for n in w_basis(m):
        f = bmn_fn(m, n).conjugate()
        for n2 in w_basis(m2):
            value = inner_product(f, bmn_fn(m2, n2))
            if value != 0:
                _fail("W_m and W_m2 are not orthogonal", value, m=m, n=n, m2=m2, n2=n2)
    return True


def skew_adjoint_check(x: SU2Generator, degree_bound: int) -> bool:
    """
    ⟨dω(X) f, conj g⟩ + ⟨f, conj(dω(X) g)⟩ = 0 on basis functions of total
    degree <= degree_bound.
    """
    basis = [hermite_fn(m, n) for m, n in basis_indices(degree_bound)]
    images = [apply_generator(x, f) for f in basis]
    for i, f in enumerate(basis):
        for j in range(i, len(basis)):
            value = hermitian_product(images[i], basis[j]) + hermitian_product(f, images[j])
            if value != 0:
                _fail("generator is not skew-adjoint", value, generator=x.value, i=i, j=j)
    return True


# ── Harmonic oscillator ───────────────────────────────────────────────────────

def harmonic_oscillator_check(m: int, n: int) -> bool:
    """((u²+v²) - (∂_u²+∂_v²))/2 · f_{m,n} = (m + n + 1) f_{m,n}."""
    f = hermite_fn(m, n)
    return _require_equal(
        harmonic_oscillator(f), f * (m + n + 1),
        "harmonic oscillator eigenrelation fails", m=m, n=n,
    )


def oscillator_symmetry_check(degree_bound: int) -> bool:
    """⟨H f, g⟩ = ⟨f, H g⟩ for the bilinear pairing on basis functions."""
    basis = [hermite_fn(m, n) for m, n in basis_indices(degree_bound)]
    images = [harmonic_oscillator(f) for f in basis]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            value = inner_product(images[i], basis[j]) - inner_product(basis[i], images[j])
            if value != 0:
                _fail("harmonic oscillator is not symmetric", value, i=i, j=j)
    return True


# ── Structural laws ───────────────────────────────────────────────────────────

def basis_roundtrip_check(f: HermGaussFn) -> bool:
    """HermGaussFn → HermiteExpansion → HermGaussFn is the identity."""
    return _require_equal(expand_in_hermite(f).to_function(), f, "basis round trip fails")


def linearity_check(x: SU2Generator, f: HermGaussFn, g: HermGaussFn, alpha, beta) -> bool:
    lhs = apply_generator(x, f * alpha + g * beta)
    rhs = apply_generator(x, f) * alpha + apply_generator(x, g) * beta
    return _require_equal(lhs, rhs, "generator is not linear", generator=x.value)


def character_laplacian_check(k: int) -> bool:
    """
    Δ(r^(2s-2) e^(ikθ)) = ((2s-2)² - k²) r^(2s-4) e^(ikθ), symbolically in
    polar coordinates.
    """
    r, theta = sp.symbols("r theta", positive=True)
    s = sp.symbols("s")
    character = sp.exp(sp.I * k * theta)
    f = r ** (2 * s - 2) * character
    laplacian = sp.diff(f, r, 2) + sp.diff(f, r) / r + sp.diff(f, theta, 2) / r ** 2
    expected = ((2 * s - 2) ** 2 - k ** 2) * r ** (2 * s - 4) * character
    residual = sp.simplify((laplacian - expected) / (r ** (2 * s - 4) * character))
    if residual != 0:
        _fail("character Laplacian identity fails", residual, k=k)
    return True
