"""Exact scalar and matrix arithmetic over ℚ and ℚ[variables]."""

from fixed_quadrics.algebra.matrix import (
    QQ,
    EchelonForm,
    PolynomialRing,
    RationalField,
    RingMatrix,
    mat_mul,
    unify_rings,
)
from fixed_quadrics.algebra.polynomial import Polynomial, merge_catalogs, poly_arith
from fixed_quadrics.algebra.specialization import (
    DEFAULT_BOUND,
    false_zero_bound,
    generic_rank,
    probably_zero,
    random_specialization,
)

__all__ = [
    "DEFAULT_BOUND",
    "EchelonForm",
    "Polynomial",
    "PolynomialRing",
    "QQ",
    "RationalField",
    "RingMatrix",
    "false_zero_bound",
    "generic_rank",
    "mat_mul",
    "merge_catalogs",
    "poly_arith",
    "probably_zero",
    "random_specialization",
    "unify_rings",
]
