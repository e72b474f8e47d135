"""
Exact weight vectors, bilinear forms and sparse signed formal series.

Weights carry a classical part in an orthogonal ambient basis together with a
level and a grade. Signed series are finitely supported integer-valued maps on
weights; they hold singular elements, denominators, carriers and anomalous
coefficient tables alike.
"""
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import (
    Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union
)
import logging
import re

from ..exceptions import DimensionMismatchError, SchemaError, TruncationError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction, str]

_RATIONAL_TEXT = re.compile(r'^\s*[+-]?\d+(?:\s*/\s*\d+)?\s*$')


def to_fraction(value: Any) -> Fraction:
    """
    Coerce an exact rational input to a reduced Fraction.

    Accepts ints, Fractions and strings of the form "p" or "p/q". Floats and
    decimal strings are rejected so that no rounding can enter a weight.

    Raises:
        SchemaError: If the value is not an exact rational
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise SchemaError(f"Expected an exact rational, got boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_TEXT.match(value):
            raise SchemaError(f"Invalid rational '{value}': expected 'p' or 'p/q'")
        try:
            return Fraction(value.replace(' ', ''))
        except ZeroDivisionError:
            raise SchemaError(f"Invalid rational '{value}': zero denominator")
    raise SchemaError(f"Expected an exact rational, got {type(value).__name__}")


def format_fraction(value: Fraction) -> str:
    """Render a rational as its reduced "p/q" (or "p") string."""
    return str(value)


@dataclass(frozen=True)
class Weight:
    """
    A point of a (possibly affine) weight lattice.

    ``finite`` holds the classical part in the ambient orthogonal basis,
    ``level`` the central coordinate k and ``grade`` the δ-coordinate n.
    """
    finite: Tuple[Fraction, ...]
    level: Fraction = Fraction(0)
    grade: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'finite', tuple(to_fraction(c) for c in self.finite))
        object.__setattr__(self, 'level', to_fraction(self.level))
        object.__setattr__(self, 'grade', to_fraction(self.grade))

    @classmethod
    def zero(cls, dim: int) -> 'Weight':
        return cls((Fraction(0),) * dim)

    @classmethod
    def delta(cls, dim: int) -> 'Weight':
        """The imaginary root δ: zero finite part, zero level, grade 1."""
        return cls((Fraction(0),) * dim, Fraction(0), Fraction(1))

    @property
    def dim(self) -> int:
        return len(self.finite)

    def _check_dim(self, other: 'Weight') -> None:
        if len(self.finite) != len(other.finite):
            raise DimensionMismatchError(
                f"Weight dimensions differ: {len(self.finite)} vs {len(other.finite)}"
            )

    def __add__(self, other: 'Weight') -> 'Weight':
        if not isinstance(other, Weight):
            return NotImplemented
        self._check_dim(other)
        return Weight(
            tuple(a + b for a, b in zip(self.finite, other.finite)),
            self.level + other.level,
            self.grade + other.grade,
        )

    def __sub__(self, other: 'Weight') -> 'Weight':
        if not isinstance(other, Weight):
            return NotImplemented
        self._check_dim(other)
        return Weight(
            tuple(a - b for a, b in zip(self.finite, other.finite)),
            self.level - other.level,
            self.grade - other.grade,
        )

    def __neg__(self) -> 'Weight':
        return Weight(tuple(-c for c in self.finite), -self.level, -self.grade)

    def scale(self, factor: Rational) -> 'Weight':
        factor = to_fraction(factor)
        return Weight(
            tuple(factor * c for c in self.finite), factor * self.level, factor * self.grade
        )

    def shift_grade(self, amount: Rational) -> 'Weight':
        return Weight(self.finite, self.level, self.grade + to_fraction(amount))

    def with_grade(self, grade: Rational) -> 'Weight':
        return Weight(self.finite, self.level, grade)

    def finite_part(self) -> 'Weight':
        """The classical part as a level-0, grade-0 weight."""
        return Weight(self.finite)

    def is_zero(self) -> bool:
        return self.level == 0 and self.grade == 0 and not any(self.finite)

    def sort_key(self) -> Tuple[Fraction, Fraction, Tuple[Fraction, ...]]:
        return (self.grade, self.level, self.finite)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'finite': [format_fraction(c) for c in self.finite],
            'level': format_fraction(self.level),
            'grade': format_fraction(self.grade),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'Weight':
        """
        Build a weight from its JSON form.

        Raises:
            SchemaError: If a key is missing or a coordinate is not exact
        """
        if not isinstance(data, Mapping) or 'finite' not in data:
            raise SchemaError(f"Weight JSON needs a 'finite' list, got {data!r}")
        finite = data['finite']
        if not isinstance(finite, (list, tuple)):
            raise SchemaError("Weight 'finite' must be a list of rationals")
        return cls(tuple(finite), data.get('level', 0), data.get('grade', 0))

    def __str__(self) -> str:
        coords = ', '.join(format_fraction(c) for c in self.finite)
        return f"({coords}; {format_fraction(self.level)}; {format_fraction(self.grade)})"


@dataclass(frozen=True)
class GramForm:
    """Symmetric bilinear form on the ambient classical space."""
    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(c) for c in row) for row in self.matrix)
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise SchemaError("Gram matrix must be square")
        for i in range(size):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise SchemaError(f"Gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, 'matrix', rows)
        diagonal = all(rows[i][j] == 0 for i in range(size) for j in range(size) if i != j)
        object.__setattr__(self, '_diagonal', tuple(rows[i][i] for i in range(size)) if diagonal else None)

    @classmethod
    def identity(cls, dim: int) -> 'GramForm':
        return cls.scalar(dim, 1)

    @classmethod
    def scalar(cls, dim: int, factor: Rational) -> 'GramForm':
        factor = to_fraction(factor)
        return cls(tuple(
            tuple(factor if i == j else Fraction(0) for j in range(dim)) for i in range(dim)
        ))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def finite_inner(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        diagonal = self._diagonal  # type: ignore[attr-defined]
        if diagonal is not None:
            return sum((d * a * b for d, a, b in zip(diagonal, x, y)), Fraction(0))
        return sum(
            (x[i] * self.matrix[i][j] * y[j] for i in range(len(x)) for j in range(len(y))),
            Fraction(0),
        )

    def to_list(self) -> List[List[str]]:
        return [[format_fraction(c) for c in row] for row in self.matrix]


@dataclass(frozen=True)
class HeightOrder:
    """
    Grade-major total order on weights.

    Ties in grade are broken by the linear functionals in order, then by the
    finite coordinates and the level. The order is translation invariant.
    """
    functionals: Tuple[Tuple[Fraction, ...], ...] = ()

    def key(self, weight: Weight) -> Tuple[Fraction, ...]:
        finite = weight.finite
        heights = tuple(
            sum((f * c for f, c in zip(functional, finite)), Fraction(0))
            for functional in self.functionals
        )
        return (weight.grade,) + heights + finite + (weight.level,)

    def is_positive(self, weight: Weight) -> bool:
        key = self.key(weight)
        return key > (Fraction(0),) * len(key)


def inner(form: GramForm, a: Weight, b: Weight) -> Fraction:
    """
    Affine-extended pairing (λ|μ) = λ̊ᵀGμ̊ + k_λ n_μ + n_λ k_μ.

    Raises:
        DimensionMismatchError: If either weight does not match the form
    """
    if a.dim != form.dim or b.dim != form.dim:
        raise DimensionMismatchError(
            f"Cannot pair weights of dimensions {a.dim} and {b.dim} with a "
            f"{form.dim}-dimensional form"
        )
    return form.finite_inner(a.finite, b.finite) + a.level * b.grade + a.grade * b.level


class SignedSeries:
    """
    Finitely supported map from weights to nonzero integers.

    ``floor`` is the grade down to which the series is known to be complete;
    ``None`` marks an exact (untruncated) series. Equality compares terms only.
    """

    __slots__ = ('_terms', '_floor')

    def __init__(self, terms: Optional[Mapping[Weight, int]] = None, floor: Optional[Rational] = None):
        floor_value = None if floor is None else to_fraction(floor)
        cleaned: Dict[Weight, int] = {}
        for weight, coefficient in (terms or {}).items():
            if not isinstance(weight, Weight):
                raise SchemaError(f"Series keys must be weights, got {type(weight).__name__}")
            coefficient = _to_int(coefficient)
            if coefficient and (floor_value is None or weight.grade >= floor_value):
                cleaned[weight] = coefficient
        self._terms = cleaned
        self._floor = floor_value

    @classmethod
    def _wrap(cls, terms: Dict[Weight, int], floor: Optional[Fraction]) -> 'SignedSeries':
        series = cls.__new__(cls)
        series._terms = {w: c for w, c in terms.items() if c and (floor is None or w.grade >= floor)}
        series._floor = floor
        return series

    @classmethod
    def monomial(cls, weight: Weight, coefficient: int = 1) -> 'SignedSeries':
        return cls({weight: coefficient})

    @classmethod
    def one(cls, dim: int) -> 'SignedSeries':
        return cls.monomial(Weight.zero(dim))

    @property
    def terms(self) -> Mapping[Weight, int]:
        return MappingProxyType(self._terms)

    @property
    def floor(self) -> Optional[Fraction]:
        return self._floor

    def coefficient(self, weight: Weight) -> int:
        return self._terms.get(weight, 0)

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._terms)

    def __contains__(self, weight: object) -> bool:
        return weight in self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedSeries):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        shown = ', '.join(f"{w}: {c:+d}" for w, c in self.sorted_items()[:6])
        more = '' if len(self._terms) <= 6 else f", ... ({len(self._terms)} terms)"
        return f"SignedSeries({{{shown}{more}}}, floor={self._floor})"

    def top_grade(self) -> Optional[Fraction]:
        return max((w.grade for w in self._terms), default=None)

    def bottom_grade(self) -> Optional[Fraction]:
        return min((w.grade for w in self._terms), default=None)

    def sorted_items(self, key: Optional[Callable[[Weight], Any]] = None) -> List[Tuple[Weight, int]]:
        """Terms in decreasing order of ``key`` (grade, level, coordinates by default)."""
        key = key or Weight.sort_key
        return sorted(self._terms.items(), key=lambda item: key(item[0]), reverse=True)

    def __add__(self, other: 'SignedSeries') -> 'SignedSeries':
        if not isinstance(other, SignedSeries):
            return NotImplemented
        return series_add(self, other)

    def __neg__(self) -> 'SignedSeries':
        return SignedSeries._wrap({w: -c for w, c in self._terms.items()}, self._floor)

    def __sub__(self, other: 'SignedSeries') -> 'SignedSeries':
        if not isinstance(other, SignedSeries):
            return NotImplemented
        return series_add(self, -other)

    def scaled(self, factor: int) -> 'SignedSeries':
        return SignedSeries._wrap({w: factor * c for w, c in self._terms.items()}, self._floor)

    def shifted(self, weight: Weight) -> 'SignedSeries':
        """Multiply by the monomial e^weight."""
        floor = None if self._floor is None else self._floor + weight.grade
        return SignedSeries._wrap({w + weight: c for w, c in self._terms.items()}, floor)

    def map_weights(self, mapping: Callable[[Weight], Weight], floor: Optional[Rational] = None) -> 'SignedSeries':
        """Push the series forward along ``mapping``; colliding terms add up."""
        out: Dict[Weight, int] = {}
        for w, c in self._terms.items():
            image = mapping(w)
            out[image] = out.get(image, 0) + c
        return SignedSeries._wrap(out, None if floor is None else to_fraction(floor))

    def restrict(self, min_grade: Rational) -> 'SignedSeries':
        """Drop every term below ``min_grade`` and record the truncation."""
        min_grade = to_fraction(min_grade)
        floor = min_grade if self._floor is None else max(self._floor, min_grade)
        return SignedSeries._wrap(self._terms, floor)

    def to_list(self) -> List[Dict[str, Any]]:
        return [
            {'weight': w.to_dict(), 'coefficient': c} for w, c in self.sorted_items()
        ]

    @classmethod
    def from_list(cls, items: Iterable[Mapping[str, Any]], floor: Optional[Rational] = None) -> 'SignedSeries':
        terms: Dict[Weight, int] = {}
        for item in items:
            try:
                weight = Weight.from_dict(item['weight'])
                coefficient = _to_int(item['coefficient'])
            except (KeyError, TypeError) as e:
                raise SchemaError(f"Malformed series term {item!r}") from e
            terms[weight] = terms.get(weight, 0) + coefficient
        return cls(terms, floor)


def _to_int(value: Any) -> int:
    if isinstance(value, bool):
        raise SchemaError("Series coefficients must be integers, got a boolean")
    if isinstance(value, int):
        return value
    value = to_fraction(value)
    if value.denominator != 1:
        raise SchemaError(f"Series coefficients must be integers, got {value}")
    return value.numerator


def _max_floor(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def series_add(a: SignedSeries, b: SignedSeries) -> SignedSeries:
    """Coefficientwise sum; vanishing terms are dropped."""
    out = dict(a._terms)
    for w, c in b._terms.items():
        out[w] = out.get(w, 0) + c
    return SignedSeries._wrap(out, _max_floor(a.floor, b.floor))


def _check_truncation(truncated: SignedSeries, other: SignedSeries, min_grade: Fraction) -> None:
    if truncated.floor is None or not other:
        return
    exact_from = truncated.floor + other.top_grade()
    if min_grade < exact_from:
        raise TruncationError(
            f"Cannot truncate soundly at grade {min_grade}: an input is only known "
            f"down to grade {truncated.floor}, so the product is exact only from "
            f"grade {exact_from} upward"
        )


def series_mul_truncated(a: SignedSeries, b: SignedSeries, min_grade: Rational) -> SignedSeries:
    """
    Distributive product e^λ·e^μ = e^{λ+μ}, keeping grades ≥ ``min_grade``.

    Args:
        a: First factor
        b: Second factor
        min_grade: Lowest grade retained in the product

    Returns:
        The product restricted to the window, exact on every retained term

    Raises:
        TruncationError: If a truncated input could hide terms inside the window
    """
    min_grade = to_fraction(min_grade)
    _check_truncation(a, b, min_grade)
    _check_truncation(b, a, min_grade)

    by_grade: Dict[Fraction, List[Tuple[Weight, int]]] = {}
    for w, c in b._terms.items():
        by_grade.setdefault(w.grade, []).append((w, c))

    out: Dict[Weight, int] = {}
    discarded = False
    for wa, ca in a._terms.items():
        for grade, block in by_grade.items():
            if wa.grade + grade < min_grade:
                discarded = True
                continue
            for wb, cb in block:
                product = wa + wb
                out[product] = out.get(product, 0) + ca * cb

    truncated = discarded or a.floor is not None or b.floor is not None
    return SignedSeries._wrap(out, min_grade if truncated else None)
