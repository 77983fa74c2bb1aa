"""
Sparse multivariate polynomials with exact coefficients.

Terms map an exponent vector (one entry per catalog variable) to a nonzero coefficient.
Coefficients are ``int`` whenever integral and :class:`fractions.Fraction` otherwise, so the
common integer case stays fast while ``exp(N)``-conjugated entries can carry ``1/2`` etc.

The monomial order is lexicographic in catalog order: the first catalog variable is the most
significant. Python tuple comparison is exactly this order, which keeps ``max`` and sorting
cheap.
"""

from __future__ import annotations

import heapq
import operator
from collections.abc import Iterable, Mapping
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

from fixed_quadrics.errors import InexactDivision, MissingAssignment

Coefficient = Union[int, Fraction]
Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


def normalize_coefficient(value: Scalar) -> Coefficient:
    """Collapse integral fractions to ``int``."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        return normalize_coefficient(Fraction(value.numerator, value.denominator))
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


def _divide(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return normalize_coefficient(Fraction(a) / Fraction(b))


def merge_catalogs(*catalogs: Iterable[str]) -> tuple[str, ...]:
    """Union of catalogs keeping first-seen order."""
    seen: dict[str, None] = {}
    for catalog in catalogs:
        for name in catalog:
            seen.setdefault(name, None)
    return tuple(seen)


class Polynomial:
    """Immutable sparse polynomial over an ordered variable catalog."""

    __slots__ = ("variables", "terms", "_hash")

    variables: tuple[str, ...]
    terms: dict[Exponent, Coefficient]

    def __init__(
        self,
        variables: Iterable[str] = (),
        terms: Mapping[Exponent, Scalar] | None = None,
    ):
        self.variables = tuple(variables)
        width = len(self.variables)
        cleaned: dict[Exponent, Coefficient] = {}
        for exponent, coeff in (terms or {}).items():
            if len(exponent) != width:
                raise ValueError(
                    f"exponent {exponent} does not match catalog of {width} variables"
                )
            value = normalize_coefficient(coeff)
            if value:
                cleaned[tuple(exponent)] = value
        self.terms = cleaned
        self._hash: int | None = None

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Exponent, Coefficient]) -> Polynomial:
        # Trusted constructor: terms already clean.
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.terms = terms
        poly._hash = None
        return poly

    # construction

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> Polynomial:
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ()) -> Polynomial:
        catalog = tuple(variables)
        coeff = normalize_coefficient(value)
        return cls._raw(catalog, {(0,) * len(catalog): coeff} if coeff else {})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str] | None = None) -> Polynomial:
        catalog = tuple(variables) if variables is not None else (name,)
        if name not in catalog:
            catalog = (*catalog, name)
        exponent = tuple(1 if v == name else 0 for v in catalog)
        return cls._raw(catalog, {exponent: 1})

    @classmethod
    def coerce(cls, value: Polynomial | Scalar, variables: Iterable[str] = ()) -> Polynomial:
        if isinstance(value, Polynomial):
            return value.with_variables(merge_catalogs(variables, value.variables))
        return cls.constant(value, variables)

    def with_variables(self, catalog: Iterable[str]) -> Polynomial:
        """Re-embed into ``catalog``, which must contain every variable actually used."""
        catalog = tuple(catalog)
        if catalog == self.variables:
            return self
        index = {name: i for i, name in enumerate(catalog)}
        width = len(catalog)
        moved: dict[Exponent, Coefficient] = {}
        for exponent, coeff in self.terms.items():
            target = [0] * width
            for name, power in zip(self.variables, exponent, strict=True):
                if power:
                    if name not in index:
                        raise ValueError(f"variable {name!r} missing from target catalog")
                    target[index[name]] = power
            moved[tuple(target)] = coeff
        return Polynomial._raw(catalog, moved)

    def _aligned(self, other: Polynomial) -> tuple[tuple[str, ...], Polynomial, Polynomial]:
        if other.variables == self.variables:
            return self.variables, self, other
        catalog = merge_catalogs(self.variables, other.variables)
        return catalog, self.with_variables(catalog), other.with_variables(catalog)

    def _lift(self, other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Polynomial.constant(other, self.variables)
        return None

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Coefficient:
        """Coefficient of the monomial 1."""
        return self.terms.get((0,) * len(self.variables), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def used_variables(self) -> tuple[str, ...]:
        used = [False] * len(self.variables)
        for exponent in self.terms:
            for i, power in enumerate(exponent):
                if power:
                    used[i] = True
        return tuple(name for name, flag in zip(self.variables, used, strict=True) if flag)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def leading_term(self) -> tuple[Exponent, Coefficient]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exponent = max(self.terms)
        return exponent, self.terms[exponent]

    def monomial_dict(self) -> dict[tuple[tuple[str, int], ...], Coefficient]:
        """Catalog-free view: ((name, power), …) -> coefficient."""
        return {
            tuple((n, p) for n, p in zip(self.variables, e, strict=True) if p): c
            for e, c in self.terms.items()
        }

    def coefficient(self, monomial: Mapping[str, int]) -> Coefficient:
        """Coefficient of the monomial given as ``{name: power}``."""
        if any(name not in self.variables for name, power in monomial.items() if power):
            return 0
        exponent = tuple(monomial.get(name, 0) for name in self.variables)
        return self.terms.get(exponent, 0)

    def content(self) -> int:
        """gcd of the integer coefficients (1 if any coefficient is fractional)."""
        result = 0
        for coeff in self.terms.values():
            if not isinstance(coeff, int):
                return 1
            result = gcd(result, coeff)
        return result or 1

    # arithmetic

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __pos__(self) -> Polynomial:
        return self

    def __add__(self, other: object) -> Polynomial:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        catalog, left, right = self._aligned(lifted)
        if not right.terms:
            return left
        result = dict(left.terms)
        for exponent, coeff in right.terms.items():
            value = result.get(exponent, 0) + coeff
            if value:
                result[exponent] = normalize_coefficient(value)
            else:
                result.pop(exponent, None)
        return Polynomial._raw(catalog, result)

    __radd__ = __add__

    def __sub__(self, other: object) -> Polynomial:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self + (-lifted)

    def __rsub__(self, other: object) -> Polynomial:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted + (-self)

    def __mul__(self, other: object) -> Polynomial:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        catalog, left, right = self._aligned(lifted)
        if not left.terms or not right.terms:
            return Polynomial._raw(catalog, {})
        if len(left.terms) > len(right.terms):
            left, right = right, left
        add = operator.add
        result: dict[Exponent, Coefficient] = {}
        for e1, c1 in left.terms.items():
            for e2, c2 in right.terms.items():
                exponent = tuple(map(add, e1, e2))
                value = result.get(exponent, 0) + c1 * c2
                if value:
                    result[exponent] = value
                else:
                    del result[exponent]
        return Polynomial._raw(catalog, {e: normalize_coefficient(c) for e, c in result.items()})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> Polynomial:
        if not isinstance(power, int) or power < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(1, self.variables)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def exquo(self, divisor: Polynomial | Scalar) -> Polynomial:
        """
        Exact division by ``divisor``.

        Raises InexactDivision if the remainder is nonzero. Used by fraction-free elimination,
        where every division is known to be exact.
        """
        lifted = self._lift(divisor)
        if lifted is None:
            raise TypeError(f"cannot divide by {type(divisor).__name__}")
        if lifted.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        catalog, dividend, div = self._aligned(lifted)
        if len(div.terms) == 1:
            (lead_exp, lead_coeff), = div.terms.items()
            quotient: dict[Exponent, Coefficient] = {}
            for exponent, coeff in dividend.terms.items():
                shift = tuple(a - b for a, b in zip(exponent, lead_exp, strict=True))
                if min(shift, default=0) < 0:
                    raise InexactDivision(f"{self} is not divisible by {divisor}")
                quotient[shift] = _divide(coeff, lead_coeff)
            return Polynomial._raw(catalog, quotient)

        lead_exp, lead_coeff = div.leading_term()
        remainder = dict(dividend.terms)
        heap = [tuple(-p for p in e) for e in remainder]
        heapq.heapify(heap)
        quotient = {}
        while heap:
            key = heapq.heappop(heap)
            exponent = tuple(-p for p in key)
            coeff = remainder.get(exponent)
            if coeff is None:
                continue
            shift = tuple(a - b for a, b in zip(exponent, lead_exp, strict=True))
            if min(shift, default=0) < 0:
                raise InexactDivision(f"{self} is not divisible by {divisor}")
            factor = _divide(coeff, lead_coeff)
            quotient[shift] = factor
            for e, c in div.terms.items():
                target = tuple(map(operator.add, e, shift))
                value = remainder.get(target, 0) - factor * c
                if value:
                    if target not in remainder:
                        heapq.heappush(heap, tuple(-p for p in target))
                    remainder[target] = normalize_coefficient(value)
                else:
                    remainder.pop(target, None)
        return Polynomial._raw(catalog, quotient)

    # evaluation and renaming

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at ``point`` (every used variable must be assigned)."""
        used = self.used_variables()
        missing = [name for name in used if name not in point]
        if missing:
            raise MissingAssignment(f"no value assigned to {', '.join(missing)}")
        values = [Fraction(point[name]) if name in point else Fraction(0) for name in self.variables]
        total = Fraction(0)
        for exponent, coeff in self.terms.items():
            term = Fraction(coeff)
            for value, power in zip(values, exponent, strict=True):
                if power:
                    term *= value**power
            total += term
        return total

    def rename(self, mapping: Mapping[str, str]) -> Polynomial:
        catalog = tuple(mapping.get(name, name) for name in self.variables)
        if len(set(catalog)) != len(catalog):
            raise ValueError("renaming would merge variables")
        return Polynomial._raw(catalog, dict(self.terms))

    # comparison and printing

    def _canonical(self) -> frozenset:
        return frozenset(self.monomial_dict().items())

    def __eq__(self, other: object) -> bool:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        if lifted.variables == self.variables:
            return lifted.terms == self.terms
        return self._canonical() == lifted._canonical()

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(self._canonical())
        return self._hash

    def sorted_terms(self) -> list[tuple[Exponent, Coefficient]]:
        """Terms in descending lexicographic monomial order."""
        return sorted(self.terms.items(), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for position, (exponent, coeff) in enumerate(self.sorted_terms()):
            factors = [
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(self.variables, exponent, strict=True)
                if power
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            negative = coeff < 0
            if position == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


_OPERATIONS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    """``p op q`` for ``op`` in ``add``/``sub``/``mul``; catalogs are merged first-seen."""
    try:
        func = _OPERATIONS[op]
    except KeyError:
        raise ValueError(f"unknown polynomial operation {op!r}") from None
    return func(p, q)
