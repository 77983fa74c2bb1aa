"""
The space S^λ of symmetric matrices fixed by u = exp(N_λ).

A symmetric ``A`` is fixed by ``u`` exactly when ``N A + A Nᵀ = 0``. The generic element of
S^λ is assembled from closed-form blocks: ``A_p`` on the diagonal and ``B_{p,q}`` above it,
with a fresh variable set per block. :func:`brute_force_fixed_basis` solves the same linear
condition directly and serves as the oracle for the closed form.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from fixed_quadrics.algebra import QQ, Polynomial, PolynomialRing, RingMatrix
from fixed_quadrics.errors import (
    BadShape,
    BoundExceeded,
    DimensionMismatch,
    LetterOverflow,
    NotNilpotent,
    NotSquare,
)
from fixed_quadrics.partitions import (
    DEFAULT_ENUMERATION_BOUND,
    BlockGrid,
    Partition,
    as_partition,
    block_grid,
)

SCHEMA_FREE = "•"
SCHEMA_ZERO = "0"
SCHEMA_LINK = "*"
LETTER_COUNT = len(string.ascii_lowercase)


@dataclass(frozen=True)
class GenericFixedMatrix:
    """Generic element M of S^λ with its variable catalog and block provenance."""

    partition: Partition
    matrix: RingMatrix
    catalog: tuple[str, ...]
    block_provenance: dict[str, tuple[tuple[int, int], int]] = field(compare=False)

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def grid(self) -> BlockGrid:
        return block_grid(self.partition)

    @property
    def variable_count(self) -> int:
        return len(self.catalog)

    def letter_map(self) -> dict[str, str]:
        if len(self.catalog) > LETTER_COUNT:
            raise LetterOverflow(
                f"{len(self.catalog)} variables do not fit in a..z; drop --letters"
            )
        return dict(zip(self.catalog, string.ascii_lowercase, strict=False))

    def with_letters(self) -> GenericFixedMatrix:
        """Rename ``v{i}_{j}_{t}`` to ``a, b, c, …`` in catalog order."""
        mapping = self.letter_map()
        catalog = tuple(mapping[name] for name in self.catalog)
        ring = PolynomialRing(catalog)
        matrix = RingMatrix(
            [[v.rename(mapping) for v in row] for row in self.matrix.entries], ring
        )
        provenance = {mapping[name]: origin for name, origin in self.block_provenance.items()}
        return GenericFixedMatrix(self.partition, matrix, catalog, provenance)

    def specialize(self, point: dict[str, Fraction]) -> RingMatrix:
        return self.matrix.evaluate(point)

    def coordinate_matrix(self, name: str) -> RingMatrix:
        """The element of S^λ with ``name = 1`` and every other variable 0."""
        point = {v: Fraction(int(v == name)) for v in self.catalog}
        return self.matrix.evaluate(point)


@dataclass(frozen=True)
class FixedSpaceBasis:
    """Basis of S^λ found by solving ``N A + A Nᵀ = 0`` over ℚ."""

    partition: Partition
    basis: list[RingMatrix]
    dim: int


@dataclass(frozen=True)
class ConjugationTransport:
    """``N′ = S N S⁻¹`` together with the isomorphism ``A ↦ S A Sᵀ``."""

    S: RingMatrix
    S_inverse: RingMatrix
    N_prime: RingMatrix

    def __call__(self, A: RingMatrix) -> RingMatrix:
        return self.S @ A @ self.S.T


def variable_name(i: int, j: int, t: int) -> str:
    return f"v{i}_{j}_{t}"


def jordan_nilpotent(lam: Partition) -> RingMatrix:
    """Block-diagonal N_λ with ones on the superdiagonal of each block."""
    lam = as_partition(lam)
    grid = block_grid(lam)
    n = lam.n
    entries = [[Fraction(0)] * n for _ in range(n)]
    for block in range(grid.k):
        span = grid.span(block)
        for r in span[:-1]:
            entries[r][r + 1] = Fraction(1)
    return RingMatrix(entries, QQ, cols=n)


def exp_nilpotent(N: RingMatrix) -> RingMatrix:
    """``exp(N) = Σ_{k<n} N^k / k!``; rejects N unless ``N^n = 0``."""
    if not N.is_square():
        raise NotSquare(f"exp of non-square {N.shape} matrix")
    n = N.rows
    if not (N**n).is_zero():
        raise NotNilpotent(f"N^{n} != 0, so N is not nilpotent")
    result = RingMatrix.identity(n, N.ring)
    power = RingMatrix.identity(n, N.ring)
    for k in range(1, n):
        power = power @ N
        if power.is_zero():
            break
        result = result + power.scale(Fraction(1, factorial(k)))
    return result


def _block_A_entries(size: int, names: list[str], variables: dict[str, Polynomial]) -> list[list]:
    m = (size + 1) // 2
    zero = next(iter(variables.values())) * 0
    rows = []
    for r in range(1, size + 1):
        row = []
        for c in range(1, size + 1):
            if (r + c) % 2 == 0 and (r + c) // 2 <= m:
                value = variables[names[(r + c) // 2 - 1]]
                row.append(value if r % 2 == 1 else -value)
            else:
                row.append(zero)
        rows.append(row)
    return rows


def _block_B_entries(p: int, q: int, names: list[str], variables: dict[str, Polynomial]) -> list[list]:
    zero = next(iter(variables.values())) * 0
    rows = []
    for r in range(1, p + 1):
        row = []
        for c in range(1, q + 1):
            if r + c - 1 <= q:
                value = variables[names[r + c - 2]]
                row.append(value if r % 2 == 1 else -value)
            else:
                row.append(zero)
        rows.append(row)
    return rows


def block_A(m_size: int, prefix: str = "a") -> RingMatrix:
    """
    Diagonal block A_m: entry (r,c) is ``(-1)^{r+1} a_{(r+c)/2}`` when r+c is even and
    ``(r+c)/2 ≤ ⌊(m+1)/2⌋``, else 0. Variables are ``{prefix}1, {prefix}2, …``.
    """
    if m_size < 1:
        raise ValueError(f"block size must be positive, got {m_size}")
    names = [f"{prefix}{t}" for t in range(1, (m_size + 1) // 2 + 1)]
    variables = {name: Polynomial.variable(name, names) for name in names}
    return RingMatrix(_block_A_entries(m_size, names, variables), PolynomialRing(names))


def block_B(p: int, q: int, prefix: str = "a") -> RingMatrix:
    """Off-diagonal block B_{p,q}: entry (r,c) is ``(-1)^{r+1} a_{r+c-1}`` when r+c-1 ≤ q."""
    if q < 1 or p < q:
        raise BadShape(f"B_{{p,q}} needs p >= q >= 1, got p={p}, q={q}")
    names = [f"{prefix}{t}" for t in range(1, q + 1)]
    variables = {name: Polynomial.variable(name, names) for name in names}
    return RingMatrix(_block_B_entries(p, q, names, variables), PolynomialRing(names))


def generic_catalog(lam: Partition) -> list[tuple[str, tuple[int, int], int]]:
    """
    Variables in catalog order: blocks column-major over the upper triangle
    (for j = 1..k, for i = 1..j), then index t within the block.
    """
    catalog = []
    for j in range(1, lam.k + 1):
        for i in range(1, j + 1):
            count = (lam[i - 1] + 1) // 2 if i == j else lam[j - 1]
            for t in range(1, count + 1):
                catalog.append((variable_name(i, j, t), (i, j), t))
    return catalog


def generic_element(lam: Partition) -> GenericFixedMatrix:
    """Assemble M from A_{λ_i} on the diagonal and B_{λ_i,λ_j} (i<j) above it."""
    lam = as_partition(lam)
    entries_meta = generic_catalog(lam)
    catalog = tuple(name for name, _, _ in entries_meta)
    provenance = {name: (block, t) for name, block, t in entries_meta}
    variables = {name: Polynomial.variable(name, catalog) for name in catalog}
    zero = Polynomial.zero(catalog)
    grid = block_grid(lam)
    n = lam.n
    entries = [[zero] * n for _ in range(n)]
    for j in range(1, lam.k + 1):
        for i in range(1, j + 1):
            count = (lam[i - 1] + 1) // 2 if i == j else lam[j - 1]
            names = [variable_name(i, j, t) for t in range(1, count + 1)]
            if i == j:
                block = _block_A_entries(lam[i - 1], names, variables)
            else:
                block = _block_B_entries(lam[i - 1], lam[j - 1], names, variables)
            rows, cols = grid.span(i - 1), grid.span(j - 1)
            for r_local, r in enumerate(rows):
                for c_local, c in enumerate(cols):
                    value = block[r_local][c_local]
                    entries[r][c] = value
                    entries[c][r] = value
    matrix = RingMatrix(entries, PolynomialRing(catalog), cols=n)
    return GenericFixedMatrix(lam, matrix, catalog, provenance)


def lie_residual(N: RingMatrix, A: RingMatrix) -> RingMatrix:
    """``N A + A Nᵀ``."""
    if not N.is_square() or not A.is_square() or N.rows != A.rows:
        raise DimensionMismatch(f"lie residual needs equal square shapes, got {N.shape}, {A.shape}")
    return N @ A + A @ N.T


def _symmetric_unknowns(n: int) -> dict[tuple[int, int], int]:
    index = {}
    for i in range(n):
        for j in range(i, n):
            index[(i, j)] = len(index)
    return index


def fixed_basis_for(N: RingMatrix) -> list[RingMatrix]:
    """Basis of ``{A symmetric : N A + A Nᵀ = 0}`` for any square ℚ-matrix N."""
    n = N.rows
    unknowns = _symmetric_unknowns(n)

    def slot(a: int, b: int) -> int:
        return unknowns[(a, b) if a <= b else (b, a)]

    equations = []
    for i in range(n):
        for j in range(i, n):
            row = [Fraction(0)] * len(unknowns)
            for k in range(n):
                if N[i, k]:
                    row[slot(k, j)] += N[i, k]
                if N[j, k]:
                    row[slot(i, k)] += N[j, k]
            equations.append(row)
    system = RingMatrix(equations, QQ, cols=len(unknowns))
    _, null_basis = system.rank_and_nullspace()
    basis = []
    for vector in null_basis:
        entries = [[Fraction(0)] * n for _ in range(n)]
        for (a, b), position in unknowns.items():
            entries[a][b] = vector[position]
            entries[b][a] = vector[position]
        basis.append(RingMatrix(entries, QQ, cols=n))
    return basis


def brute_force_fixed_basis(lam: Partition, bound: int = DEFAULT_ENUMERATION_BOUND) -> FixedSpaceBasis:
    """Solve the fixed-point condition with ``n(n+1)/2`` unknowns over ℚ."""
    lam = as_partition(lam)
    if lam.n > bound:
        raise BoundExceeded(f"n={lam.n} exceeds brute-force bound {bound}")
    basis = fixed_basis_for(jordan_nilpotent(lam))
    return FixedSpaceBasis(partition=lam, basis=basis, dim=len(basis))


def dim_S(lam: Partition) -> int:
    lam = as_partition(lam)
    return sum((p + 1) // 2 for p in lam.parts) + sum(i * p for i, p in enumerate(lam.parts))


def letters_fit(lam: Partition) -> bool:
    return dim_S(lam) <= LETTER_COUNT


def dim_Q(lam: Partition) -> int:
    """Dimension of the projective space Q^λ = P(S^λ)."""
    return dim_S(lam) - 1


def in_pattern_span(G: GenericFixedMatrix, B: RingMatrix) -> bool:
    """
    True when B is a specialization of the generic element.

    Entries of M are 0 or ±v, so B is in the span exactly when B vanishes wherever M does and
    all positions carrying the same variable agree after removing the sign.
    """
    if B.shape != G.matrix.shape:
        return False
    values: dict[str, Fraction] = {}
    for i in range(G.n):
        for j in range(G.n):
            entry = G.matrix[i, j]
            target = Fraction(B[i, j])
            if not entry:
                if target:
                    return False
                continue
            (exponent, coeff), = entry.terms.items()
            name = entry.variables[exponent.index(1)]
            value = target / coeff
            if values.setdefault(name, value) != value:
                return False
    return True


def conjugation_transport(S: RingMatrix, lam: Partition) -> ConjugationTransport:
    """Transport S^λ to the fixed space of ``N′ = S N_λ S⁻¹``."""
    lam = as_partition(lam)
    if S.shape != (lam.n, lam.n):
        raise DimensionMismatch(f"S must be {lam.n}x{lam.n}, got {S.shape}")
    S_inverse = S.inverse()
    N_prime = S @ jordan_nilpotent(lam) @ S_inverse
    return ConjugationTransport(S=S, S_inverse=S_inverse, N_prime=N_prime)


def fixed_by_unipotent(A: RingMatrix, lam: Partition) -> bool:
    """``u A uᵀ = A`` for ``u = exp(N_λ)``."""
    u = exp_nilpotent(jordan_nilpotent(as_partition(lam)))
    return u @ A @ u.T == A


def link_schema(lam: Partition) -> list[list[str]]:
    """
    Initial zeros and asymmetric links of ``N_λ A`` skew-symmetry.

    Rows in I (first row of a block) are free ``•``; otherwise ``(i, j)`` is an initial zero
    ``0`` if ``j = i − 1`` or ``j`` is in K (last row of a block), and an asymmetric link ``*``
    otherwise.
    """
    lam = as_partition(lam)
    grid = block_grid(lam)
    first_rows = {grid.offsets[b] + 1 for b in range(grid.k)}
    last_rows = {grid.offsets[b + 1] for b in range(grid.k)}
    schema = []
    for i in range(1, lam.n + 1):
        row = []
        for j in range(1, lam.n + 1):
            if i in first_rows:
                row.append(SCHEMA_FREE)
            elif j == i - 1 or j in last_rows:
                row.append(SCHEMA_ZERO)
            else:
                row.append(SCHEMA_LINK)
        schema.append(row)
    return schema


def residual_is_zero(N: RingMatrix, A: RingMatrix) -> bool:
    return lie_residual(N, A).is_zero()


