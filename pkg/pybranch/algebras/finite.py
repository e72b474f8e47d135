"""
Finite simple algebras in orthogonal coordinates.
"""
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple
import logging

from .spec import AlgebraKind, AlgebraSpec, classical_fundamental_weights
from ..exceptions import SchemaError, UnsupportedAlgebraError
from ..models.lattice import GramForm, Weight

logger = logging.getLogger(__name__)

RootTable = Tuple[int, List[Tuple[int, ...]], Fraction]


def _unit(dim: int, index: int, factor: int = 1) -> List[int]:
    vector = [0] * dim
    vector[index] = factor
    return vector


def _chain(dim: int, count: int) -> List[Tuple[int, ...]]:
    roots = []
    for i in range(count):
        vector = _unit(dim, i)
        vector[i + 1] = -1
        roots.append(tuple(vector))
    return roots


def _type_a(rank: int) -> RootTable:
    return rank + 1, _chain(rank + 1, rank), Fraction(1)


def _type_b(rank: int) -> RootTable:
    return rank, _chain(rank, rank - 1) + [tuple(_unit(rank, rank - 1))], Fraction(1)


def _type_c(rank: int) -> RootTable:
    # Long roots ±2e_i get norm 2 under the scaled form.
    return rank, _chain(rank, rank - 1) + [tuple(_unit(rank, rank - 1, 2))], Fraction(1, 2)


def _type_d(rank: int) -> RootTable:
    last = _unit(rank, rank - 2)
    last[rank - 1] = 1
    return rank, _chain(rank, rank - 1) + [tuple(last)], Fraction(1)


def _type_g(rank: int) -> RootTable:
    # α1 long, α2 short: |α1|² = 2, |α2|² = 2/3, (α1|α2) = -1.
    return 3, [(-2, 1, 1), (1, -1, 0)], Fraction(1, 3)


class FiniteSeries:
    """Builders and admissible ranks for the supported finite series."""

    BUILDERS: Dict[str, Tuple[Callable[[int], RootTable], int]] = {
        'A': (_type_a, 1),
        'B': (_type_b, 1),
        'C': (_type_c, 2),
        'D': (_type_d, 3),
        'G': (_type_g, 2),
    }

    FIXED_RANKS = {'G': 2}

    @classmethod
    def supported(cls) -> List[str]:
        return sorted(cls.BUILDERS)

    @classmethod
    def root_table(cls, series: str, rank: int) -> RootTable:
        series = series.upper()
        if series == 'G2':
            series = 'G'
        if series not in cls.BUILDERS:
            raise UnsupportedAlgebraError(
                f"Unsupported finite series '{series}'. Supported: {', '.join(cls.supported())}"
            )
        builder, min_rank = cls.BUILDERS[series]
        fixed = cls.FIXED_RANKS.get(series)
        if isinstance(rank, bool) or not isinstance(rank, int) or rank < min_rank or (fixed and rank != fixed):
            raise UnsupportedAlgebraError(f"Unsupported rank {rank!r} for series {series}")
        return builder(rank)


def finite_from_simple_roots(
    kind: AlgebraKind,
    roots: Sequence[Sequence[Fraction]],
    gram: GramForm,
) -> AlgebraSpec:
    """
    Build a finite spec from explicit simple roots in a given ambient form.

    Used by the series builders and by injections that realize a subalgebra
    inside the ambient coordinates of a larger one.

    Raises:
        SchemaError: If the roots do not form a basis of a root system
    """
    simple = tuple(Weight(tuple(r)) for r in roots)
    for root in simple:
        if root.dim != gram.dim:
            raise SchemaError(f"Simple root {root} does not match the {gram.dim}-dimensional form")
    for a in simple:
        for b in simple:
            integer = 2 * gram.finite_inner(a.finite, b.finite) / gram.finite_inner(b.finite, b.finite)
            if integer.denominator != 1 or (a != b and integer > 0):
                raise SchemaError(f"Roots {a} and {b} give Cartan integer {integer}")

    weights = classical_fundamental_weights(simple, gram)
    rho = Weight.zero(gram.dim)
    for omega in weights:
        rho = rho + omega

    spec = AlgebraSpec(
        kind=kind,
        ambient_dim=gram.dim,
        gram=gram,
        simple_roots=simple,
        rho=rho,
        classical_rank=len(simple),
    )
    logger.debug(f"Built {kind.label} with {len(spec.classical_positive_roots)} positive roots")
    return spec


def build_finite(series: str, rank: int) -> AlgebraSpec:
    """
    Construct a finite simple algebra of type A_r, B_r, C_r, D_r or G2.

    Args:
        series: Series letter ("G2" is accepted for G)
        rank: Rank of the algebra

    Returns:
        AlgebraSpec with ρ equal to the half-sum of positive roots

    Raises:
        UnsupportedAlgebraError: For other series or invalid ranks
    """
    dim, roots, scale = FiniteSeries.root_table(series, rank)
    letter = 'G' if series.upper() in ('G', 'G2') else series.upper()
    kind = AlgebraKind(letter, rank)
    return finite_from_simple_roots(
        kind,
        [tuple(Fraction(c) for c in r) for r in roots],
        GramForm.scalar(dim, scale),
    )
