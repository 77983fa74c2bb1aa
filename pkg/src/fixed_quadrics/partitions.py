"""
Integer partitions and the combinatorics of Jordan types.

A partition ``λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_k ≥ 1)`` of ``n`` records the block sizes of the
nilpotent Jordan matrix ``N_λ``. Everything the fixed-space and determinant/rank code needs
about ``λ`` lives here: the conjugate, multiplicities, degeneracy numbers, the derived
sequences ``λ^{(i)}`` / ``μ^{(i)}`` and the block grid of the λ-decomposition.

Row and column indices exposed to users are 1-based; internal offsets are 0-based.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from fixed_quadrics.errors import (
    BoundExceeded,
    EmptyPartition,
    IndexOutOfRange,
    InvalidSize,
    PartitionSyntaxError,
)

DEFAULT_ENUMERATION_BOUND = 12

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Partition:
    """Immutable, weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise EmptyPartition("partition has no positive parts")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:], strict=False)):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        """Map part value -> multiplicity, in increasing part order."""
        counts = Counter(self.parts)
        return {part: counts[part] for part in sorted(counts)}

    @cached_property
    def conjugate(self) -> Partition:
        return conjugate(self)

    def exponent_form(self) -> str:
        """Render as ``(1^a1, 2^a2, …)`` listing only parts that occur."""
        return "(" + ", ".join(f"{p}^{a}" for p, a in self.multiplicities.items()) + ")"


@dataclass(frozen=True)
class BlockGrid:
    """Cumulative offsets ``0, λ_1, λ_1+λ_2, …, n`` of a λ-decomposition."""

    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.offsets) < 2 or self.offsets[0] != 0:
            raise ValueError(f"offsets must start at 0 and describe at least one block: {self.offsets}")
        if any(a >= b for a, b in zip(self.offsets, self.offsets[1:], strict=False)):
            raise ValueError(f"offsets must be strictly increasing: {self.offsets}")

    @property
    def k(self) -> int:
        return len(self.offsets) - 1

    @property
    def n(self) -> int:
        return self.offsets[-1]

    def sizes(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.offsets, self.offsets[1:], strict=False))

    def span(self, block: int) -> range:
        """0-based index range of ``block`` (0-based)."""
        return range(self.offsets[block], self.offsets[block + 1])

    def rows(self, block: int) -> range:
        """1-based row (or column) range of 1-based ``block``."""
        if not 1 <= block <= self.k:
            raise IndexOutOfRange(f"block {block} outside 1..{self.k}")
        return range(self.offsets[block - 1] + 1, self.offsets[block] + 1)

    def boundaries(self) -> tuple[int, ...]:
        """Indices after which a rule is drawn (all interior offsets)."""
        return self.offsets[1:-1]

    def block_of(self, index: int) -> int:
        """0-based block containing 0-based ``index``."""
        for block in range(self.k):
            if self.offsets[block] <= index < self.offsets[block + 1]:
                return block
        raise IndexOutOfRange(f"index {index} outside 0..{self.n - 1}")


@dataclass(frozen=True)
class PartGroup:
    """Run of equal parts in λ: one diagonal block of the coarsened decomposition."""

    part: int
    multiplicity: int
    first_block: int  # 0-based index into λ's parts
    start: int  # 0-based matrix offset

    @property
    def stop(self) -> int:
        return self.start + self.part * self.multiplicity


def normalize(raw: Iterable[int]) -> Partition:
    """Strip zeros and sort weakly decreasing."""
    values = list(raw)
    if any(v < 0 for v in values):
        raise ValueError(f"parts must be non-negative: {values}")
    parts = sorted((v for v in values if v > 0), reverse=True)
    if not parts:
        raise EmptyPartition(f"no positive entry in {values}")
    return Partition(tuple(parts))


def parse_partition(text: str) -> Partition:
    """
    Parse ``"4,2,2,2"`` or exponent syntax ``"2^3,4^1"``.

    Parentheses and whitespace are ignored, so ``(1^0, 2^1, 3^2)`` also parses.
    """
    cleaned = text.strip().strip("()").replace(" ", "")
    if not cleaned:
        raise PartitionSyntaxError(f"empty partition text: {text!r}")
    raw: list[int] = []
    for token in cleaned.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise PartitionSyntaxError(f"bad partition token {token!r} in {text!r}")
        value = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        raw.extend([value] * count)
    return normalize(raw)


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram: ``μ_i = #{j : λ_j ≥ i}``."""
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.largest + 1)))


def degeneracy(lam: Partition) -> int:
    """Number of even part values occurring an odd number of times."""
    return sum(1 for part, count in lam.multiplicities.items() if part % 2 == 0 and count % 2 == 1)


def sub_partition(lam: Partition, i: int) -> Partition:
    """``λ^{[i]}``: the parts of λ that are ≤ i."""
    if not 1 <= i <= lam.largest:
        raise IndexOutOfRange(f"part value {i} outside 1..{lam.largest}")
    return Partition(tuple(p for p in lam.parts if p <= i))


def partial_degeneracy(lam: Partition, i: int) -> int:
    """``d_i(λ) = d(λ^{[i]})``; zero when no part is ≤ i."""
    if not 1 <= i <= lam.largest:
        raise IndexOutOfRange(f"part value {i} outside 1..{lam.largest}")
    small = [p for p in lam.parts if p <= i]
    if not small:
        return 0
    return degeneracy(Partition(tuple(small)))


def derived_sequence(lam: Partition) -> list[Partition]:
    """``λ^{(1)} = λ``; each next term removes the right-most box of every row."""
    sequence = [lam]
    current = lam.parts
    for _ in range(lam.largest - 1):
        current = tuple(p - 1 for p in current if p > 1)
        sequence.append(Partition(current))
    return sequence


def conjugate_sequence(lam: Partition) -> list[Partition]:
    """``μ^{(i)} = (μ_i, …, μ_l)`` for ``i = 1..λ_1``."""
    mu = lam.conjugate.parts
    return [Partition(mu[i:]) for i in range(len(mu))]


def block_grid(lam: Partition) -> BlockGrid:
    offsets = [0]
    for part in lam.parts:
        offsets.append(offsets[-1] + part)
    return BlockGrid(tuple(offsets))


def equal_part_groups(lam: Partition) -> list[PartGroup]:
    """Group consecutive equal parts (the lines between equal parts removed)."""
    groups: list[PartGroup] = []
    offset = 0
    block = 0
    while block < lam.k:
        part = lam.parts[block]
        count = 1
        while block + count < lam.k and lam.parts[block + count] == part:
            count += 1
        groups.append(PartGroup(part=part, multiplicity=count, first_block=block, start=offset))
        offset += part * count
        block += count
    return groups


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first, *rest)


def enumerate_partitions(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 1:
        raise InvalidSize(f"n must be positive, got {n}")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds enumeration bound {bound}")
    return [Partition(parts) for parts in _partitions_bounded(n, n)]


def partition_count(n: int) -> int:
    """``p(n)`` by Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            first = j * (3 * j - 1) // 2
            if first > m:
                break
            sign = 1 if j % 2 == 1 else -1
            total += sign * table[m - first]
            second = j * (3 * j + 1) // 2
            if second <= m:
                total += sign * table[m - second]
            j += 1
        table[m] = total
    return table[n]


def as_partition(value: Partition | Sequence[int] | str) -> Partition:
    """Coerce user input (text, raw sequence or Partition) to a Partition."""
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return normalize(value)
