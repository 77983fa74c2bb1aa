"""Seeded random specialization for polynomial identity testing (Schwartz–Zippel)."""

from __future__ import annotations

import random
from collections.abc import Iterable
from fractions import Fraction

from fixed_quadrics.algebra.matrix import RingMatrix
from fixed_quadrics.algebra.polynomial import Polynomial

DEFAULT_BOUND = 10**6


def random_specialization(
    variables: Iterable[str], seed: int, bound: int = DEFAULT_BOUND
) -> dict[str, Fraction]:
    """
    Assign each variable a nonzero integer in ``[-bound, bound]``.

    The assignment depends only on ``(catalog, seed, bound)``; trial ``t`` of a run uses
    ``seed + t``.
    """
    if bound < 2:
        raise ValueError(f"bound must be at least 2, got {bound}")
    rng = random.Random(seed)  # nosec B311 - reproducible test points, not cryptography
    point = {}
    for name in variables:
        magnitude = rng.randint(1, bound)
        point[name] = Fraction(magnitude if rng.random() < 0.5 else -magnitude)
    return point


def false_zero_bound(degree: int, bound: int = DEFAULT_BOUND, trials: int = 1) -> Fraction:
    """Upper bound on the chance a nonzero degree-``degree`` polynomial vanishes in all trials."""
    return Fraction(degree, 2 * bound) ** trials


def probably_zero(
    poly: Polynomial, trials: int = 5, seed: int = 0, bound: int = DEFAULT_BOUND
) -> bool:
    """True when ``poly`` vanishes at every seeded random point."""
    for trial in range(trials):
        point = random_specialization(poly.variables, seed + trial, bound)
        if poly.evaluate(point):
            return False
    return True


def generic_rank(
    matrix: RingMatrix, trials: int = 5, seed: int = 0, bound: int = DEFAULT_BOUND
) -> int:
    """Largest rank observed over ``trials`` seeded specializations."""
    variables = getattr(matrix.ring, "variables", ())
    best = 0
    for trial in range(trials):
        point = random_specialization(variables, seed + trial, bound)
        rank, _ = matrix.evaluate(point).rank_and_nullspace()
        best = max(best, rank)
        if best == min(matrix.shape):
            break
    return best
