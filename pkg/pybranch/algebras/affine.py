"""
Affine algebras: untwisted X_r^(1) and the twisted series A_{2r}^(2).
"""
from fractions import Fraction
from typing import List, Tuple
import logging

from .finite import build_finite
from .spec import AlgebraKind, AlgebraSpec, RootClass
from ..exceptions import UnsupportedAlgebraError
from ..models.lattice import Weight

logger = logging.getLogger(__name__)


def _affine_rho(classical: AlgebraSpec, alpha0: Weight) -> Weight:
    """Lift ρ̊ to the affine ρ, fixing the level by (ρ|α0^∨) = 1."""
    half_norm = classical.norm(alpha0) / 2
    level = (half_norm - classical.gram.finite_inner(classical.rho.finite, alpha0.finite)) / alpha0.grade
    return Weight(classical.rho.finite, level, 0)


def _signed_classes(classical: AlgebraSpec, residue: int = 0, modulus: int = 1) -> List[RootClass]:
    classes = []
    for root in classical.classical_positive_roots:
        classes.append(RootClass(root.finite, residue, modulus))
        classes.append(RootClass((-root).finite, residue, modulus))
    return classes


def _untwisted(series: str, rank: int) -> AlgebraSpec:
    classical = build_finite(series, rank)
    theta = classical.highest_root
    alpha0 = Weight((-theta).finite, 0, 1)
    return AlgebraSpec(
        kind=AlgebraKind(classical.kind.series, rank, 1),
        ambient_dim=classical.ambient_dim,
        gram=classical.gram,
        simple_roots=(alpha0,) + classical.simple_roots,
        rho=_affine_rho(classical, alpha0),
        classical_rank=rank,
        translation_basis=classical.classical_coroots,
        imaginary_multiplicity=rank,
        real_root_classes=tuple(_signed_classes(classical)),
    )


def _twisted_a_even(rank: int) -> AlgebraSpec:
    """
    A_{2r}^(2) with classical part B_r and |e_i|² = 1.

    α0 = δ − 2e_1; real roots are ±e_i + nδ, ±e_i ± e_j + nδ and
    ±2e_i + (2n+1)δ.
    """
    half = rank // 2
    classical = build_finite('B', half)
    dim = classical.ambient_dim
    alpha0 = Weight(tuple(Fraction(-2) if i == 0 else Fraction(0) for i in range(dim)), 0, 1)

    classes = _signed_classes(classical)
    units: List[Weight] = []
    for i in range(half):
        unit = tuple(Fraction(1) if k == i else Fraction(0) for k in range(dim))
        units.append(Weight(unit))
        doubled = tuple(2 * c for c in unit)
        classes.append(RootClass(doubled, 1, 2))
        classes.append(RootClass(tuple(-c for c in doubled), 1, 2))

    return AlgebraSpec(
        kind=AlgebraKind('A', rank, 2),
        ambient_dim=dim,
        gram=classical.gram,
        simple_roots=(alpha0,) + classical.simple_roots,
        rho=_affine_rho(classical, alpha0),
        classical_rank=half,
        # Spanned by the W̊-orbit of the finite part of −α0^∨: the translations s_{α0}s_θ̊.
        translation_basis=tuple(units),
        imaginary_multiplicity=half,
        real_root_classes=tuple(classes),
    )


def build_affine(series: str, rank: int, twist: int) -> AlgebraSpec:
    """
    Construct an affine algebra.

    Args:
        series: Series letter of the underlying finite algebra (or of A_{2r} for twist 2)
        rank: Rank r for X_r^(1); the even index 2r for A_{2r}^(2)
        twist: 1 for untwisted, 2 for A_{2r}^(2)

    Returns:
        AlgebraSpec listing α0 first, with affine ρ and translation lattice

    Raises:
        UnsupportedAlgebraError: For other twists or series
    """
    series = series.upper()
    if series == 'G2':
        series = 'G'
    if twist == 1:
        spec = _untwisted(series, rank)
    elif twist == 2 and series == 'A' and isinstance(rank, int) and rank >= 2 and rank % 2 == 0:
        spec = _twisted_a_even(rank)
    else:
        raise UnsupportedAlgebraError(
            f"Unsupported affine algebra {series}{rank}^({twist}); "
            f"supported are X_r^(1) and A_2r^(2)"
        )
    logger.debug(f"Built {spec.label}: rho = {spec.rho}, mult(delta) = {spec.imaginary_multiplicity}")
    return spec
