"""
tate.lrh._core.weil.generators
==============================
The Lie-algebra action dω of the su(2) basis on Hermite–Gaussian functions.

In scaled coordinates every generator has ℚ[i] coefficients:

    dω(J) = (i/2)(u² - v²) - (i/2)(∂_u² - ∂_v²)
    dω(K) = -i·uv + i·∂_u ∂_v
    dω(R) = -v ∂_u + u ∂_v

Each operator splits into a multiplication part and a differential part;
the Fourier intertwining check conjugates one into the other.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple

from tate.core.exceptions import DomainError
from tate.lrh._core.exact.scalars import I, GaussianRational, Scalar, coerce, imag_part, real_part
from tate.lrh._core.weil.hermgauss import HermGaussFn

Matrix2 = Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]

_HALF_I = I * Fraction(1, 2)


class SU2Generator(Enum):
    """The su(2, ℂ) basis J, K, R with their 2×2 matrices."""
    J = "J"
    K = "K"
    R = "R"

    @property
    def matrix(self) -> Matrix2:
        return _MATRICES[self]


_MATRICES: Dict[SU2Generator, Matrix2] = {
    SU2Generator.J: ((Fraction(0), Fraction(1)), (Fraction(-1), Fraction(0))),
    SU2Generator.K: ((Fraction(0), I), (I, Fraction(0))),
    SU2Generator.R: ((I, Fraction(0)), (Fraction(0), -I)),
}


# ── Operator pieces ───────────────────────────────────────────────────────────

def multiplication_part(x: SU2Generator, f: HermGaussFn) -> HermGaussFn:
    """Zeroth-order piece: (i/2)(u²-v²) for J, -i·uv for K, 0 for R."""
    if x is SU2Generator.J:
        return (f.times_u().times_u() - f.times_v().times_v()) * _HALF_I
    if x is SU2Generator.K:
        return f.times_u().times_v() * (-I)
    return HermGaussFn.zero()


def differential_part(x: SU2Generator, f: HermGaussFn) -> HermGaussFn:
    """Derivative piece: -(i/2)(∂_u²-∂_v²) for J, i∂_u∂_v for K, -v∂_u + u∂_v for R."""
    if x is SU2Generator.J:
        return (f.d_u().d_u() - f.d_v().d_v()) * (-_HALF_I)
    if x is SU2Generator.K:
        return f.d_u().d_v() * I
    return f.d_v().times_u() - f.d_u().times_v()


def apply_generator(x: SU2Generator, f: HermGaussFn) -> HermGaussFn:
    """dω(x) f, exactly."""
    if not isinstance(x, SU2Generator):
        raise DomainError(f"not an su(2) generator: {x!r}", details={"generator": repr(x)})
    return multiplication_part(x, f) + differential_part(x, f)


def harmonic_oscillator(f: HermGaussFn) -> HermGaussFn:
    """((u² + v²) - (∂_u² + ∂_v²)) f / 2; f_{m,n} has eigenvalue m + n + 1."""
    potential = f.times_u().times_u() + f.times_v().times_v()
    kinetic = f.d_u().d_u() + f.d_v().d_v()
    return (potential - kinetic) * Fraction(1, 2)


# ── Brackets ──────────────────────────────────────────────────────────────────

def _matmul(a: Matrix2, b: Matrix2) -> Matrix2:
    return tuple(
        tuple(coerce(a[i][0] * b[0][j] + a[i][1] * b[1][j]) for j in range(2))
        for i in range(2)
    )


def matrix_bracket(x: SU2Generator, y: SU2Generator) -> Matrix2:
    """[X, Y] = XY - YX as an exact 2×2 matrix."""
    xy, yx = _matmul(x.matrix, y.matrix), _matmul(y.matrix, x.matrix)
    return tuple(tuple(coerce(xy[i][j] - yx[i][j]) for j in range(2)) for i in range(2))


def decompose_su2(m: Matrix2) -> Dict[SU2Generator, Fraction]:
    """
    Real coordinates of an su(2) matrix

        [[iα,      β + iγ],
         [-β + iγ, -iα   ]]  =  α·R + β·J + γ·K.

    Raises DomainError when m is not in su(2).
    """
    alpha, beta, gamma = imag_part(m[0][0]), real_part(m[0][1]), imag_part(m[0][1])
    rebuilt = (
        (GaussianRational(0, alpha), GaussianRational(beta, gamma)),
        (GaussianRational(-beta, gamma), GaussianRational(0, -alpha)),
    )
    if any(coerce(rebuilt[i][j]) != coerce(m[i][j]) for i in range(2) for j in range(2)):
        raise DomainError("matrix is not in su(2)", details={"matrix": str(m)})
    return {SU2Generator.R: alpha, SU2Generator.J: beta, SU2Generator.K: gamma}


def apply_combination(coords: Dict[SU2Generator, Fraction], f: HermGaussFn) -> HermGaussFn:
    """dω(Σ c_X X) f = Σ c_X dω(X) f."""
    out = HermGaussFn.zero()
    for x, c in coords.items():
        if c != 0:
            out = out + apply_generator(x, f) * c
    return out
