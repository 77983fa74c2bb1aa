"""
Determinant and rank of the generic fixed quadric.

Two theorems are computed here and each is checked against an independent oracle:

* ``det M`` factors as the product of the leading principal minors ``det P_i`` of the
  ``k × k`` corner matrix ``P`` (one entry per block), with sizes given by the conjugate
  partition. :func:`det_direct` expands ``det M`` without the factorization.
* the corank of ``M`` equals the degeneracy number ``d(λ)``. It is certified from both sides:
  :func:`null_basis` gives ``d(λ)`` independent null vectors and :func:`witness_minor` a
  nonzero minor of size ``n - d(λ)``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from fixed_quadrics.algebra import (
    DEFAULT_BOUND,
    Polynomial,
    RingMatrix,
    generic_rank,
    random_specialization,
)
from fixed_quadrics.errors import BoundExceeded, WitnessNotFound
from fixed_quadrics.fixed_space import GenericFixedMatrix, dim_Q
from fixed_quadrics.partitions import (
    BlockGrid,
    Partition,
    as_partition,
    block_grid,
    degeneracy,
    equal_part_groups,
    partial_degeneracy,
)
from fixed_quadrics.report import NOT_EXPANDED

DEFAULT_SYMBOLIC_BOUND = 9
DEFAULT_EXACT_RANK_BOUND = 8
DEFAULT_TRIALS = 5


@dataclass(frozen=True)
class DetFactorization:
    """``P``, the factors ``det P_i`` for ``i = 1..λ_1`` and their product."""

    P: RingMatrix
    factors: list[Polynomial]
    product: Polynomial
    sizes: tuple[int, ...]  # μ_i, the size of P_i


@dataclass(frozen=True)
class RestrictedMatrices:
    """``M′`` (column selection) and ``M″`` (row selection of ``M′``), with 1-based indices."""

    Mprime: RingMatrix
    Mdoubleprime: RingMatrix
    columns: tuple[int, ...]
    rows: tuple[int, ...]

    def deleted_rows_zero(self) -> bool:
        """Rows of ``M′`` dropped when forming ``M″`` are zero rows."""
        kept = {r - 1 for r in self.rows}
        dropped = [r for r in range(self.Mprime.rows) if r not in kept]
        zero = set(self.Mprime.zero_rows())
        return all(r in zero for r in dropped)


@dataclass(frozen=True)
class MinorWitness:
    """
    A square submatrix of ``M`` certified nonsingular.

    ``certificate`` is ``"symbolic"`` (minor expanded and nonzero), ``"specialization"``
    (nonzero at a seeded point) or ``"search"`` (found by pivoting after the block
    construction failed).
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    minor_det: Polynomial | None
    certificate: str
    point_value: Fraction | None = None

    @property
    def size(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class RankWitness:
    """Both halves of the corank certificate."""

    corank: int
    Mprime: RingMatrix
    Mdoubleprime: RingMatrix
    null_vectors: list[list[Polynomial]]
    witness_rows: tuple[int, ...]
    witness_cols: tuple[int, ...]
    minor: MinorWitness = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.witness_rows)


@dataclass(frozen=True)
class BoxedDecomposition:
    """``det M = sign · det D1 · det D2`` with ``D1`` the corner entries of each block."""

    D1: RingMatrix
    D2: RingMatrix
    sign: int
    inner_grid: BlockGrid | None

    def determinant(self) -> Polynomial:
        value = self.D1.det() * self.D2.det()
        return value if self.sign > 0 else -value


# determinant


def upper_right_matrix(G: GenericFixedMatrix) -> RingMatrix:
    """``P[i][j]``: the upper-right corner entry of block ``(i, j)`` of ``M``."""
    offsets = G.grid.offsets
    k = G.partition.k
    rows = [offsets[i] for i in range(k)]
    cols = [offsets[j + 1] - 1 for j in range(k)]
    return G.matrix.submatrix(rows, cols)


def det_by_formula(G: GenericFixedMatrix) -> DetFactorization:
    """``det M = Π det P_i`` where ``P_i`` is the leading ``μ_i × μ_i`` block of ``P``."""
    P = upper_right_matrix(G)
    mu = G.partition.conjugate.parts
    factors = []
    for size in mu:
        leading = list(range(size))
        factors.append(P.submatrix(leading, leading).det())
    product = Polynomial.constant(1, G.catalog)
    for factor in factors:
        if not factor:
            product = Polynomial.zero(G.catalog)
            break
        product = product * factor
    return DetFactorization(P, factors, product, tuple(mu))


def formula_vanishes(
    G: GenericFixedMatrix, trials: int = DEFAULT_TRIALS, seed: int = 0, bound: int = DEFAULT_BOUND
) -> bool:
    """
    Whether ``Π det P_i`` is the zero polynomial, without expanding any factor.

    A factor that is nonzero at some seeded point is certainly nonzero; otherwise the exact
    fraction-free rank of ``P_i`` decides.
    """
    P = upper_right_matrix(G)
    return any(
        _leading_block_vanishes(P, size, trials, seed, bound)
        for size in G.partition.conjugate.parts
    )


def _leading_block_vanishes(P: RingMatrix, size: int, trials: int, seed: int, bound: int) -> bool:
    leading = list(range(size))
    block = P.submatrix(leading, leading)
    if generic_rank(block, trials, seed, bound) == size:
        return False
    return block.rank() < size


def reported_factors(
    G: GenericFixedMatrix,
    symbolic_bound: int = DEFAULT_SYMBOLIC_BOUND,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
) -> list[str]:
    """
    ``det P_i`` as strings for ``i = 1..λ_1``.

    A factor whose block ``P_i`` is larger than ``symbolic_bound`` is not expanded: it reads
    ``"0"`` when the block is singular, else ``NOT_EXPANDED``.
    """
    P = upper_right_matrix(G)
    factors = []
    for size in G.partition.conjugate.parts:
        if size <= symbolic_bound:
            leading = list(range(size))
            factors.append(str(P.submatrix(leading, leading).det()))
        elif _leading_block_vanishes(P, size, trials, seed, bound):
            factors.append("0")
        else:
            factors.append(NOT_EXPANDED)
    return factors


def det_direct(G: GenericFixedMatrix, symbolic_bound: int = DEFAULT_SYMBOLIC_BOUND) -> Polynomial:
    """Determinant of the full ``n × n`` generic element."""
    if G.n > symbolic_bound:
        raise BoundExceeded(f"n={G.n} exceeds symbolic determinant bound {symbolic_bound}")
    return G.matrix.det()


def det_consistency(
    G: GenericFixedMatrix, trials: int = DEFAULT_TRIALS, seed: int = 0, bound: int = DEFAULT_BOUND
) -> bool:
    """``det M(x) = Π det P_i(x)`` at seeded rational points; no symbolic expansion."""
    P = upper_right_matrix(G)
    mu = G.partition.conjugate.parts
    for trial in range(trials):
        point = random_specialization(G.catalog, seed + trial, bound)
        product = Fraction(1)
        P_at = P.evaluate(point)
        for size in mu:
            leading = list(range(size))
            product *= P_at.submatrix(leading, leading).det()
        if G.matrix.evaluate(point).det() != product:
            return False
    return True


def boxed_decomposition(M: RingMatrix, grid: BlockGrid) -> BoxedDecomposition:
    """
    Split ``M`` into the boxed corner entries ``D1`` (first row and last column of each block)
    and the complementary ``D2``.

    ``D2`` lives on the grid of the partition with every part reduced by one; blocks of size 1
    disappear there, so ``inner_grid`` is ``None`` once every part is 1.
    """
    k = grid.k
    boxed_rows = [grid.offsets[i] for i in range(k)]
    boxed_cols = [grid.offsets[j + 1] - 1 for j in range(k)]
    other_rows = [r for r in range(grid.n) if r not in boxed_rows]
    other_cols = [c for c in range(grid.n) if c not in boxed_cols]
    D1 = M.submatrix(boxed_rows, boxed_cols)
    D2 = M.submatrix(other_rows, other_cols)
    sign = -1 if (grid.n - k) % 2 else 1
    inner = [size - 1 for size in grid.sizes() if size > 1]
    inner_grid = block_grid(Partition(tuple(inner))) if inner else None
    return BoxedDecomposition(D1, D2, sign, inner_grid)


def signed_det_chain(G: GenericFixedMatrix) -> list[tuple[RingMatrix, int]]:
    """
    Repeatedly split off the boxed entries: ``M^{(i)}`` is ``D1`` of the ``i``-th remainder.

    Returns ``(M^{(i)}, (-1)^{(i-1)μ_i})`` for ``i = 1..λ_1``; the determinant of ``M`` is the
    signed product of the ``det M^{(i)}``.
    """
    mu = G.partition.conjugate.parts
    return [
        (split.D1, -1 if (i * mu[i]) % 2 else 1) for i, split in enumerate(boxed_splits(G))
    ]


def boxed_splits(G: GenericFixedMatrix) -> list[BoxedDecomposition]:
    """The successive boxed decompositions, one per ``i = 1..λ_1``."""
    splits = []
    current = G.matrix
    grid = G.grid
    for _ in range(G.partition.largest):
        split = boxed_decomposition(current, grid)
        splits.append(split)
        if split.inner_grid is None:
            break
        current, grid = split.D2, split.inner_grid
    return splits


def chain_signs_agree(G: GenericFixedMatrix) -> bool:
    """The product of the per-split signs equals the product of the chain signs."""
    split_sign = 1
    for split in boxed_splits(G):
        split_sign *= split.sign
    chain_sign = 1
    for _, sign in signed_det_chain(G):
        chain_sign *= sign
    return split_sign == chain_sign


def chain_determinant(G: GenericFixedMatrix) -> Polynomial:
    """Signed product of the ``det M^{(i)}``."""
    result = Polynomial.constant(1, G.catalog)
    for block, sign in signed_det_chain(G):
        value = block.det()
        if not value:
            return Polynomial.zero(G.catalog)
        result = result * value if sign > 0 else -(result * value)
    return result


def chain_matches_corner(G: GenericFixedMatrix) -> bool:
    """``M^{(i)} = P_i`` for odd ``i`` and ``-P_i`` for even ``i``."""
    P = upper_right_matrix(G)
    mu = G.partition.conjugate.parts
    for i, (block, _) in enumerate(signed_det_chain(G)):
        leading = list(range(mu[i]))
        expected = P.submatrix(leading, leading)
        if i % 2:
            expected = -expected
        if block != expected:
            return False
    return True


# rank


def corank_expected(lam: Partition) -> int:
    return degeneracy(as_partition(lam))


def corank_computed(
    G: GenericFixedMatrix, trials: int = DEFAULT_TRIALS, seed: int = 0, bound: int = DEFAULT_BOUND
) -> int:
    """``n`` minus the largest rank seen over ``trials`` seeded specializations."""
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    return G.n - generic_rank(G.matrix, trials, seed, bound)


def corank_exact(G: GenericFixedMatrix, exact_rank_bound: int = DEFAULT_EXACT_RANK_BOUND) -> int:
    """Corank over the fraction field by fraction-free elimination."""
    if G.n > exact_rank_bound:
        raise BoundExceeded(f"n={G.n} exceeds exact rank bound {exact_rank_bound}")
    return G.n - G.matrix.rank()


def false_pass_bound(n: int, trials: int = DEFAULT_TRIALS, bound: int = DEFAULT_BOUND) -> Fraction:
    """Chance that every randomized trial under-reports the rank of an ``n × n`` generic element."""
    return Fraction(n, 2 * bound) ** trials


def restricted_matrices(G: GenericFixedMatrix) -> RestrictedMatrices:
    """
    ``M′``: the last ``d_p(λ)`` columns of every column block of part ``p``.
    ``M″``: the first ``d_p(λ)`` rows of every row block of ``M′``.
    """
    lam = G.partition
    offsets = G.grid.offsets
    columns: list[int] = []
    rows: list[int] = []
    for block, part in enumerate(lam.parts):
        d = partial_degeneracy(lam, part)
        columns.extend(range(offsets[block + 1] - d, offsets[block + 1]))
        rows.extend(range(offsets[block], offsets[block] + d))
    Mprime = G.matrix.submatrix(range(G.n), columns)
    Mdoubleprime = Mprime.submatrix(rows, range(len(columns)))
    return RestrictedMatrices(
        Mprime,
        Mdoubleprime,
        tuple(c + 1 for c in columns),
        tuple(r + 1 for r in rows),
    )


def null_basis(G: GenericFixedMatrix) -> list[list[Polynomial]]:
    """Polynomial null vectors of ``M`` from the null space of ``M″``, padded to length ``n``."""
    restricted = restricted_matrices(G)
    zero = Polynomial.zero(G.catalog)
    if not restricted.columns:
        return []
    vectors = []
    for local in restricted.Mdoubleprime.fraction_free_nullspace():
        full = [zero] * G.n
        for value, column in zip(local, restricted.columns, strict=True):
            full[column - 1] = value
        vectors.append(full)
    return vectors


def annihilates(M: RingMatrix, vector: Sequence[Polynomial]) -> bool:
    return all(not value for value in M.apply(vector))


def independent(vectors: list[list[Polynomial]], trials: int = DEFAULT_TRIALS, seed: int = 0) -> bool:
    """Linear independence over the fraction field, certified by one full-rank specialization."""
    if not vectors:
        return True
    stacked = RingMatrix(vectors)
    return generic_rank(stacked, trials, seed) == len(vectors)


def witness_indices(lam: Partition) -> list[int]:
    """
    0-based rows (= columns) of the block-constructed witness minor.

    Everything is kept except, for each run of an even part with odd multiplicity, the last
    index of the middle block of the run.
    """
    lam = as_partition(lam)
    grid = block_grid(lam)
    excluded = set()
    for group in equal_part_groups(lam):
        if group.part % 2 == 0 and group.multiplicity % 2 == 1:
            middle = group.first_block + (group.multiplicity - 1) // 2
            excluded.add(grid.offsets[middle + 1] - 1)
    return [i for i in range(lam.n) if i not in excluded]


def witness_minor(
    G: GenericFixedMatrix,
    symbolic_bound: int = DEFAULT_SYMBOLIC_BOUND,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
) -> MinorWitness:
    """
    A verified nonzero minor of size ``n - d(λ)``.

    The block construction is tried first and verified; if it does not verify, pivoting on
    seeded specializations finds rows and columns whose minor is nonzero at that point.
    """
    indices = witness_indices(G.partition)
    submatrix = G.matrix.submatrix(indices, indices)
    one_based = tuple(i + 1 for i in indices)
    if G.n <= symbolic_bound:
        minor = submatrix.det()
        if minor:
            return MinorWitness(one_based, one_based, minor, "symbolic")
    else:
        for trial in range(trials):
            point = random_specialization(G.catalog, seed + trial, bound)
            value = submatrix.evaluate(point).det()
            if value:
                return MinorWitness(one_based, one_based, None, "specialization", value)
    return _search_witness(G, G.n - degeneracy(G.partition), symbolic_bound, trials, seed, bound)


def _search_witness(
    G: GenericFixedMatrix, size: int, symbolic_bound: int, trials: int, seed: int, bound: int
) -> MinorWitness:
    for trial in range(trials):
        point = random_specialization(G.catalog, seed + trial, bound)
        specialized = G.matrix.evaluate(point)
        form = specialized.echelon()
        if form.rank < size:
            continue
        rows = sorted(form.pivot_rows[:size])
        cols = sorted(form.pivot_cols[:size])
        value = specialized.submatrix(rows, cols).det()
        if not value:
            continue
        minor = G.matrix.submatrix(rows, cols).det() if G.n <= symbolic_bound else None
        return MinorWitness(
            tuple(r + 1 for r in rows), tuple(c + 1 for c in cols), minor, "search", value
        )
    raise WitnessNotFound(
        f"no nonzero {size}x{size} minor of the generic element for {G.partition} "
        f"in {trials} trials"
    )


def rank_witness(
    G: GenericFixedMatrix,
    symbolic_bound: int = DEFAULT_SYMBOLIC_BOUND,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
) -> RankWitness:
    restricted = restricted_matrices(G)
    vectors = null_basis(G)
    minor = witness_minor(G, symbolic_bound, trials, seed, bound)
    return RankWitness(
        corank=len(vectors),
        Mprime=restricted.Mprime,
        Mdoubleprime=restricted.Mdoubleprime,
        null_vectors=vectors,
        witness_rows=minor.rows,
        witness_cols=minor.cols,
        minor=minor,
    )


# smoothness


def has_smooth_member(lam: Partition) -> bool:
    """Some quadric fixed by ``u`` is nonsingular exactly when the generic corank is zero."""
    return degeneracy(as_partition(lam)) == 0


def smooth_locus_dimension(lam: Partition) -> int | None:
    """Dimension of the open set of smooth fixed quadrics, ``None`` when it is empty."""
    lam = as_partition(lam)
    return dim_Q(lam) if has_smooth_member(lam) else None
