"""
Dense matrices over an exact ring.

Two rings are used throughout: :data:`QQ` (``fractions.Fraction``) and :class:`PolynomialRing`
(sparse polynomials with integer or rational coefficients). A :class:`RingMatrix` knows its
ring, so elimination code can ask for ``zero``/``one`` and for exact division without caring
which ring it runs over.

Elimination always picks the lowest-index nonzero pivot. Matrices here are small (n ≤ 12) and
reproducibility matters more than speed.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Union

from fixed_quadrics.algebra.polynomial import Polynomial, Scalar, merge_catalogs
from fixed_quadrics.errors import DimensionMismatch, NotSquare, SingularS

Element = Union[Fraction, Polynomial]

COFACTOR_MAX_DIM = 4
MONOMIAL_COFACTOR_MAX_DIM = 16


class RationalField:
    """The field ℚ of exact rationals."""

    name = "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Polynomial):
            if not value.is_constant():
                raise TypeError(f"cannot coerce non-constant {value} into QQ")
            return Fraction(value.constant_value())
        return Fraction(value)

    def is_zero(self, value: Element) -> bool:
        return not value

    def exquo(self, a: Fraction, b: Fraction) -> Fraction:
        return a / b

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class PolynomialRing:
    """Polynomials over a fixed variable catalog."""

    name = "Poly"

    def __init__(self, variables: Iterable[str] = ()):
        self.variables = tuple(variables)

    @property
    def zero(self) -> Polynomial:
        return Polynomial.zero(self.variables)

    @property
    def one(self) -> Polynomial:
        return Polynomial.constant(1, self.variables)

    def coerce(self, value: Any) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.variables == self.variables:
                return value
            return value.with_variables(merge_catalogs(self.variables, value.variables))
        return Polynomial.constant(value, self.variables)

    def is_zero(self, value: Element) -> bool:
        return not value

    def exquo(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return a.exquo(b)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolynomialRing) and other.variables == self.variables

    def __hash__(self) -> int:
        return hash((self.name, self.variables))

    def __repr__(self) -> str:
        return f"PolynomialRing({len(self.variables)} vars)"


Ring = Union[RationalField, PolynomialRing]


def unify_rings(*rings: Ring) -> Ring:
    """Widen to a polynomial ring over the union catalog if any ring is polynomial."""
    poly = [r for r in rings if isinstance(r, PolynomialRing)]
    if not poly:
        return QQ
    return PolynomialRing(merge_catalogs(*(r.variables for r in poly)))


@dataclass(frozen=True)
class EchelonForm:
    """Result of fraction-free row reduction."""

    pivot_cols: tuple[int, ...]
    pivot_rows: tuple[int, ...]  # original row indices, in pivot order

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)


class RingMatrix:
    """Immutable dense ``rows × cols`` matrix over :data:`QQ` or a :class:`PolynomialRing`."""

    __slots__ = ("rows", "cols", "ring", "entries")

    def __init__(self, entries: Sequence[Sequence[Any]], ring: Ring | None = None, cols: int | None = None):
        grid = [list(row) for row in entries]
        self.rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(row) != cols for row in grid):
            raise DimensionMismatch("ragged rows: every row needs the same length")
        self.cols = cols
        if ring is None:
            ring = _infer_ring(value for row in grid for value in row)
        self.ring = ring
        self.entries: tuple[tuple[Element, ...], ...] = tuple(
            tuple(ring.coerce(value) for value in row) for row in grid
        )

    # construction

    @classmethod
    def identity(cls, n: int, ring: Ring = QQ) -> RingMatrix:
        zero, one = ring.zero, ring.one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], ring, cols=n)

    # basic access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Element:
        i, j = index
        return self.entries[i][j]

    def to_ring(self, ring: Ring) -> RingMatrix:
        if ring == self.ring:
            return self
        return RingMatrix(self.entries, ring, cols=self.cols)

    def transpose(self) -> RingMatrix:
        return RingMatrix(
            [list(col) for col in zip(*self.entries, strict=True)] if self.rows else [],
            self.ring,
            cols=self.rows,
        )

    @property
    def T(self) -> RingMatrix:
        return self.transpose()

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RingMatrix:
        """Rows and columns by 0-based index, in the order given."""
        return RingMatrix(
            [[self.entries[i][j] for j in cols] for i in rows], self.ring, cols=len(cols)
        )

    # predicates

    def is_zero(self) -> bool:
        return all(not v for row in self.entries for v in row)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def zero_rows(self) -> list[int]:
        return [i for i, row in enumerate(self.entries) if all(not v for v in row)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b
            for left, right in zip(self.entries, other.entries, strict=True)
            for a, b in zip(left, right, strict=True)
        )

    __hash__ = None  # type: ignore[assignment]

    # arithmetic

    def _unified(self, other: RingMatrix) -> tuple[RingMatrix, RingMatrix, Ring]:
        ring = unify_rings(self.ring, other.ring)
        return self.to_ring(ring), other.to_ring(ring), ring

    def __add__(self, other: RingMatrix) -> RingMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        left, right, ring = self._unified(other)
        return RingMatrix(
            [
                [a + b for a, b in zip(r1, r2, strict=True)]
                for r1, r2 in zip(left.entries, right.entries, strict=True)
            ],
            ring,
            cols=self.cols,
        )

    def __neg__(self) -> RingMatrix:
        return RingMatrix([[-v for v in row] for row in self.entries], self.ring, cols=self.cols)

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        return self + (-other)

    def scale(self, factor: Any) -> RingMatrix:
        ring = unify_rings(self.ring, _infer_ring([factor]))
        factor = ring.coerce(factor)
        return RingMatrix(
            [[factor * v for v in row] for row in self.to_ring(ring).entries], ring, cols=self.cols
        )

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        return mat_mul(self, other)

    def __pow__(self, power: int) -> RingMatrix:
        if not self.is_square():
            raise NotSquare(f"cannot raise {self.shape} matrix to a power")
        result = RingMatrix.identity(self.rows, self.ring)
        for _ in range(power):
            result = result @ self
        return result

    def apply(self, vector: Sequence[Any]) -> list[Element]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.shape} matrix")
        ring = unify_rings(self.ring, _infer_ring(vector))
        vec = [ring.coerce(v) for v in vector]
        out = []
        for row in self.to_ring(ring).entries:
            total = ring.zero
            for a, b in zip(row, vec, strict=True):
                if a and b:
                    total = total + a * b
            out.append(total)
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> RingMatrix:
        """Specialize polynomial entries at ``point`` into a ℚ-matrix."""
        if isinstance(self.ring, RationalField):
            return self
        return RingMatrix(
            [[v.evaluate(point) for v in row] for row in self.entries], QQ, cols=self.cols
        )

    # determinants

    def det(self, method: str = "auto") -> Element:
        """
        Exact determinant.

        ``auto`` uses Bareiss fraction-free elimination, except over polynomials for
        dimension ≤ 4 or for matrices whose entries are all single terms (up to dimension 16),
        where the memoized cofactor expansion never builds large intermediate minors.
        """
        if not self.is_square():
            raise NotSquare(f"determinant of non-square {self.shape} matrix")
        if method == "auto":
            method = "cofactor" if self._prefers_cofactor() else "bareiss"
        if method == "bareiss":
            return _det_bareiss(self)
        if method == "cofactor":
            return _det_cofactor(self)
        raise ValueError(f"unknown determinant method {method!r}")

    def is_monomial(self) -> bool:
        """Every entry is zero or a single term."""
        return all(
            not isinstance(v, Polynomial) or len(v) <= 1 for row in self.entries for v in row
        )

    def _prefers_cofactor(self) -> bool:
        if not isinstance(self.ring, PolynomialRing):
            return False
        if self.rows <= COFACTOR_MAX_DIM:
            return True
        return self.rows <= MONOMIAL_COFACTOR_MAX_DIM and self.is_monomial()

    # elimination

    def echelon(self) -> EchelonForm:
        """Fraction-free row echelon pivots (rank over the fraction field)."""
        return _fraction_free_echelon(self)

    def rank(self) -> int:
        return self.echelon().rank

    def rank_and_nullspace(self) -> tuple[int, list[list[Fraction]]]:
        """Rank and reduced-echelon null basis of a ℚ-matrix."""
        if not isinstance(self.ring, RationalField):
            raise TypeError("rank_and_nullspace needs a rational matrix; evaluate first")
        return _rational_nullspace(self)

    def fraction_free_nullspace(self) -> list[list[Element]]:
        """
        Null basis over the fraction field with denominators cleared.

        For each free column ``f`` the vector has ``det(A[R, P])`` at ``f`` and Cramer
        cofactors at the pivot columns, so every entry is a ring element.
        """
        form = self.echelon()
        pivots = list(form.pivot_cols)
        rows = list(form.pivot_rows)
        free = [j for j in range(self.cols) if j not in pivots]
        if not free:
            return []
        base = self.submatrix(rows, pivots)
        denominator = base.det() if pivots else self.ring.one
        basis = []
        for f in free:
            vector = [self.ring.zero] * self.cols
            vector[f] = denominator
            for t, p in enumerate(pivots):
                replaced = [list(r) for r in base.entries]
                for r_index, r in enumerate(rows):
                    replaced[r_index][t] = self.entries[r][f]
                vector[p] = -RingMatrix(replaced, self.ring, cols=len(pivots)).det()
            basis.append(_primitive(vector))
        return basis

    def inverse(self) -> RingMatrix:
        """Inverse of an invertible ℚ-matrix by Gauss-Jordan elimination."""
        if not self.is_square():
            raise NotSquare(f"inverse of non-square {self.shape} matrix")
        if not isinstance(self.ring, RationalField):
            raise TypeError("inverse is only implemented over QQ")
        n = self.rows
        work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.entries)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if work[r][c]), None)
            if pivot is None:
                raise SingularS("matrix is singular")
            work[c], work[pivot] = work[pivot], work[c]
            lead = work[c][c]
            work[c] = [v / lead for v in work[c]]
            for r in range(n):
                if r != c and work[r][c]:
                    factor = work[r][c]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[c], strict=True)]
        return RingMatrix([row[n:] for row in work], QQ, cols=n)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(v) for v in row) for row in self.entries)
        return f"RingMatrix({self.rows}x{self.cols}, {self.ring!r}, [{body}])"


def _infer_ring(values: Iterable[Any]) -> Ring:
    catalogs = [v.variables for v in values if isinstance(v, Polynomial)]
    if catalogs:
        return PolynomialRing(merge_catalogs(*catalogs))
    return QQ


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """Exact product; rings are widened to a common one."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    left, right, ring = a._unified(b)
    columns = list(zip(*right.entries, strict=True)) if right.rows else [()] * right.cols
    out = []
    for row in left.entries:
        nonzero = [(k, v) for k, v in enumerate(row) if v]
        out_row = []
        for col in columns:
            total = ring.zero
            for k, v in nonzero:
                w = col[k]
                if w:
                    total = total + v * w
            out_row.append(total)
        out.append(out_row)
    return RingMatrix(out, ring, cols=b.cols)


def _det_bareiss(matrix: RingMatrix) -> Element:
    ring = matrix.ring
    n = matrix.rows
    if n == 0:
        return ring.one
    work = [list(row) for row in matrix.entries]
    sign = 1
    previous = ring.one
    for k in range(n - 1):
        if not work[k][k]:
            swap = next((i for i in range(k + 1, n) if work[i][k]), None)
            if swap is None:
                return ring.zero
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            below = work[i][k]
            for j in range(k + 1, n):
                value = pivot * work[i][j]
                if below and work[k][j]:
                    value = value - below * work[k][j]
                work[i][j] = ring.exquo(value, previous) if value else ring.zero
            work[i][k] = ring.zero
        previous = pivot
    result = work[n - 1][n - 1]
    return -result if sign < 0 else result


def _det_cofactor(matrix: RingMatrix) -> Element:
    """Laplace expansion by rows, memoized over the set of used columns."""
    ring = matrix.ring
    n = matrix.rows
    if n == 0:
        return ring.one
    layer: dict[int, Element] = {0: ring.one}
    for r in range(n):
        row = matrix.entries[r]
        nonzero = [j for j in range(n) if row[j]]
        following: dict[int, Element] = {}
        for used, minor in layer.items():
            for j in nonzero:
                bit = 1 << j
                if used & bit:
                    continue
                inversions = bin(used >> (j + 1)).count("1")
                term = minor * row[j]
                if inversions % 2:
                    term = -term
                key = used | bit
                following[key] = following[key] + term if key in following else term
        layer = {key: value for key, value in following.items() if value}
        if not layer:
            return ring.zero
    return layer.get((1 << n) - 1, ring.zero)


def _fraction_free_echelon(matrix: RingMatrix) -> EchelonForm:
    ring = matrix.ring
    work = [list(row) for row in matrix.entries]
    order = list(range(matrix.rows))
    pivot_cols: list[int] = []
    previous = ring.one
    r = 0
    for c in range(matrix.cols):
        if r == matrix.rows:
            break
        found = next((i for i in range(r, matrix.rows) if work[i][c]), None)
        if found is None:
            continue
        work[r], work[found] = work[found], work[r]
        order[r], order[found] = order[found], order[r]
        pivot = work[r][c]
        for i in range(r + 1, matrix.rows):
            below = work[i][c]
            for j in range(c + 1, matrix.cols):
                value = pivot * work[i][j]
                if below and work[r][j]:
                    value = value - below * work[r][j]
                work[i][j] = ring.exquo(value, previous) if value else ring.zero
            work[i][c] = ring.zero
        previous = pivot
        pivot_cols.append(c)
        r += 1
    return EchelonForm(tuple(pivot_cols), tuple(order[: len(pivot_cols)]))


def _rational_nullspace(matrix: RingMatrix) -> tuple[int, list[list[Fraction]]]:
    work = [list(row) for row in matrix.entries]
    pivots: list[int] = []
    r = 0
    for c in range(matrix.cols):
        if r == matrix.rows:
            break
        found = next((i for i in range(r, matrix.rows) if work[i][c]), None)
        if found is None:
            continue
        work[r], work[found] = work[found], work[r]
        lead = work[r][c]
        work[r] = [v / lead for v in work[r]]
        for i in range(matrix.rows):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r], strict=True)]
        pivots.append(c)
        r += 1
    basis = []
    for f in (j for j in range(matrix.cols) if j not in pivots):
        vector = [Fraction(0)] * matrix.cols
        vector[f] = Fraction(1)
        for row_index, p in enumerate(pivots):
            vector[p] = -work[row_index][f]
        basis.append(vector)
    return len(pivots), basis


def _primitive(vector: list[Element]) -> list[Element]:
    """Divide out the common integer content of a polynomial vector."""
    polys = [v for v in vector if isinstance(v, Polynomial) and v]
    if not polys or len(polys) != len([v for v in vector if v]):
        return vector
    content = 0
    for p in polys:
        content = gcd(content, p.content())
    if content <= 1:
        return vector
    return [v.exquo(content) if v else v for v in vector]
