"""Exact scalars, polynomials, Sturm certificates and small linear algebra."""

from tate.lrh._core.exact.scalars import (
    BigRational,
    GaussianRational,
    I,
    coerce,
    conj,
    format_rational,
    i_power,
    parse_rational,
    to_mp,
)
from tate.lrh._core.exact.unipoly import (
    UniPoly,
    critical_line_lift,
    critical_line_restriction,
    poly_gcd,
    poly_shift,
)
from tate.lrh._core.exact.sturm import (
    cauchy_root_bound,
    count_real_roots,
    squarefree_check,
    sturm_chain,
    sturm_count,
)
from tate.lrh._core.exact.linalg import EchelonBasis, nullspace, rank, rref

__all__ = [
    "BigRational",
    "GaussianRational",
    "I",
    "coerce",
    "conj",
    "format_rational",
    "i_power",
    "parse_rational",
    "to_mp",
    "UniPoly",
    "critical_line_lift",
    "critical_line_restriction",
    "poly_gcd",
    "poly_shift",
    "cauchy_root_bound",
    "count_real_roots",
    "squarefree_check",
    "sturm_chain",
    "sturm_count",
    "EchelonBasis",
    "nullspace",
    "rank",
    "rref",
]
