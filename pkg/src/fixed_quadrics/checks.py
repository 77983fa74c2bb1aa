"""
Validators for one partition.

Every validator takes a :class:`VerificationContext` plus the checklist ``args`` and returns
``(passed, message)``. Expensive artefacts live on the context and are built once, the first
time a validator asks for them.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from functools import cached_property
from fractions import Fraction

from fixed_quadrics.algebra import QQ, RingMatrix, random_specialization
from fixed_quadrics.config import Settings
from fixed_quadrics.errors import SingularS
from fixed_quadrics.fixed_space import (
    FixedSpaceBasis,
    GenericFixedMatrix,
    brute_force_fixed_basis,
    conjugation_transport,
    dim_S,
    exp_nilpotent,
    generic_element,
    in_pattern_span,
    jordan_nilpotent,
    lie_residual,
)
from fixed_quadrics.partitions import Partition, degeneracy
from fixed_quadrics.quadric_props import (
    DetFactorization,
    MinorWitness,
    RestrictedMatrices,
    annihilates,
    chain_determinant,
    chain_matches_corner,
    chain_signs_agree,
    corank_computed,
    corank_exact,
    det_by_formula,
    det_direct,
    formula_vanishes,
    independent,
    null_basis,
    restricted_matrices,
    witness_minor,
)

CheckResult = tuple[bool, str]
Validator = Callable[..., CheckResult]


class VerificationContext:
    """A partition, the run settings and lazily built artefacts."""

    def __init__(self, partition: Partition, settings: Settings | None = None):
        self.partition = partition
        self.settings = settings or Settings()

    @property
    def n(self) -> int:
        return self.partition.n

    @cached_property
    def generic(self) -> GenericFixedMatrix:
        G = generic_element(self.partition)
        return G.with_letters() if self.settings.letters else G

    @cached_property
    def nilpotent(self) -> RingMatrix:
        return jordan_nilpotent(self.partition)

    @cached_property
    def brute_force(self) -> FixedSpaceBasis:
        return brute_force_fixed_basis(self.partition, self.settings.enumeration_bound)

    @cached_property
    def factorization(self) -> DetFactorization:
        return det_by_formula(self.generic)

    @cached_property
    def restricted(self) -> RestrictedMatrices:
        return restricted_matrices(self.generic)

    @cached_property
    def null_vectors(self) -> list:
        return null_basis(self.generic)

    @cached_property
    def minor(self) -> MinorWitness:
        s = self.settings
        return witness_minor(
            self.generic, s.symbolic_bound, s.trials, s.seed, s.specialization_bound
        )

    @cached_property
    def corank(self) -> int:
        s = self.settings
        return corank_computed(self.generic, s.trials, s.seed, s.specialization_bound)

    @cached_property
    def det_vanishes(self) -> bool:
        s = self.settings
        return formula_vanishes(self.generic, s.trials, s.seed, s.specialization_bound)

    @property
    def symbolic(self) -> bool:
        return self.n <= self.settings.symbolic_bound


# fixed space


def check_symbolic_membership(ctx: VerificationContext) -> CheckResult:
    residual = lie_residual(ctx.nilpotent, ctx.generic.matrix)
    if residual.is_zero():
        return True, "N M + M Nᵀ = 0"
    return False, f"nonzero residual entries: {sum(1 for r in residual.entries for v in r if v)}"


def check_dimension_match(ctx: VerificationContext) -> CheckResult:
    solved = ctx.brute_force.dim
    pattern = ctx.generic.variable_count
    formula = dim_S(ctx.partition)
    message = f"brute force {solved}, variables {pattern}, formula {formula}"
    return solved == pattern == formula, message


def check_span_equality(ctx: VerificationContext) -> CheckResult:
    G = ctx.generic
    outside = [i for i, B in enumerate(ctx.brute_force.basis) if not in_pattern_span(G, B)]
    if outside:
        return False, f"brute-force basis matrices outside the pattern: {outside}"
    for name in G.catalog:
        if not lie_residual(ctx.nilpotent, G.coordinate_matrix(name)).is_zero():
            return False, f"coordinate matrix of {name} is not fixed"
    return True, f"{ctx.brute_force.dim} basis matrices and {G.variable_count} coordinates agree"


def check_exp_equivalence(ctx: VerificationContext) -> CheckResult:
    u = exp_nilpotent(ctx.nilpotent)
    M = ctx.generic.matrix
    if u @ M @ u.T == M:
        return True, "u M uᵀ = M"
    return False, "u M uᵀ differs from M"


def check_unipotence(ctx: VerificationContext) -> CheckResult:
    u = exp_nilpotent(ctx.nilpotent)
    shifted = u - RingMatrix.identity(ctx.n, QQ)
    if not (shifted**ctx.n).is_zero():
        return False, "(u - I)^n != 0"
    det = u.det()
    if det != 1:
        return False, f"det u = {det}"
    return True, "(u - I)^n = 0 and det u = 1"


def _random_invertible(n: int, seed: int) -> RingMatrix:
    rng = random.Random(seed)  # nosec B311 - reproducible test matrices
    while True:
        S = RingMatrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)], QQ)
        if S.det():
            return S


def check_conjugation_equivariance(ctx: VerificationContext, samples: int = 5) -> CheckResult:
    s = ctx.settings
    G = ctx.generic
    for sample in range(samples):
        S = _random_invertible(ctx.n, s.seed + sample)
        try:
            transport = conjugation_transport(S, ctx.partition)
        except SingularS:
            return False, f"sample {sample}: random S was singular"
        point = random_specialization(G.catalog, s.seed + sample, s.specialization_bound)
        A = G.specialize(point)
        if not lie_residual(transport.N_prime, transport(A)).is_zero():
            return False, f"sample {sample}: transported matrix is not fixed by N′"
    return True, f"{samples} random conjugations preserve the fixed space"


# determinant


def check_det_identity(ctx: VerificationContext) -> CheckResult:
    direct = det_direct(ctx.generic, ctx.settings.symbolic_bound)
    formula = ctx.factorization.product
    if direct == formula:
        return True, f"det M = {direct}"
    return False, f"formula {formula} != direct {direct}"


def check_chain_identity(ctx: VerificationContext) -> CheckResult:
    if not chain_matches_corner(ctx.generic):
        return False, "boxed chain blocks differ from ±P_i"
    if not chain_signs_agree(ctx.generic):
        return False, "boxed split signs disagree with the chain signs"
    if ctx.symbolic and chain_determinant(ctx.generic) != ctx.factorization.product:
        return False, "signed chain product differs from Π det P_i"
    return True, "M^(i) = ±P_i"


def check_vanishing_criterion(ctx: VerificationContext) -> CheckResult:
    expected = degeneracy(ctx.partition) > 0
    observed = ctx.det_vanishes
    message = f"det M {'vanishes' if observed else 'nonzero'}, degeneracy {degeneracy(ctx.partition)}"
    return observed == expected, message


# rank


def check_corank_randomized(ctx: VerificationContext) -> CheckResult:
    expected = degeneracy(ctx.partition)
    return ctx.corank == expected, f"corank {ctx.corank}, expected {expected}"


def check_corank_exact(ctx: VerificationContext) -> CheckResult:
    exact = corank_exact(ctx.generic, ctx.settings.exact_rank_bound)
    expected = degeneracy(ctx.partition)
    return exact == expected, f"exact corank {exact}, expected {expected}"


def check_deleted_rows_zero(ctx: VerificationContext) -> CheckResult:
    if ctx.restricted.deleted_rows_zero():
        return True, f"M′ is {ctx.restricted.Mprime.rows}x{ctx.restricted.Mprime.cols}"
    return False, "a row dropped from M′ is nonzero"


def check_null_witnesses(ctx: VerificationContext) -> CheckResult:
    vectors = ctx.null_vectors
    expected = degeneracy(ctx.partition)
    if len(vectors) != expected:
        return False, f"{len(vectors)} null vectors, expected {expected}"
    M = ctx.generic.matrix
    for index, vector in enumerate(vectors):
        if not annihilates(M, vector):
            return False, f"null vector {index} does not annihilate M"
    if not independent(vectors, ctx.settings.trials, ctx.settings.seed):
        return False, "null vectors are dependent"
    return True, f"{len(vectors)} independent null vectors"


def check_minor_witness(ctx: VerificationContext) -> CheckResult:
    minor = ctx.minor
    expected = ctx.n - degeneracy(ctx.partition)
    if minor.size != expected or len(minor.cols) != expected:
        return False, f"minor of size {minor.size}, expected {expected}"
    return True, f"nonzero {expected}x{expected} minor ({minor.certificate})"


VALIDATORS: dict[str, Validator] = {
    "check_symbolic_membership": check_symbolic_membership,
    "check_dimension_match": check_dimension_match,
    "check_span_equality": check_span_equality,
    "check_exp_equivalence": check_exp_equivalence,
    "check_unipotence": check_unipotence,
    "check_conjugation_equivariance": check_conjugation_equivariance,
    "check_det_identity": check_det_identity,
    "check_chain_identity": check_chain_identity,
    "check_vanishing_criterion": check_vanishing_criterion,
    "check_corank_randomized": check_corank_randomized,
    "check_corank_exact": check_corank_exact,
    "check_deleted_rows_zero": check_deleted_rows_zero,
    "check_null_witnesses": check_null_witnesses,
    "check_minor_witness": check_minor_witness,
}
