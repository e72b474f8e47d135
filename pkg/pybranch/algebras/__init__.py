"""
Finite and affine algebra construction, Weyl orbits and singular elements.
"""
from typing import Any, Mapping, Union

from .affine import build_affine
from .finite import FiniteSeries, build_finite, finite_from_simple_roots
from .spec import AlgebraKind, AlgebraSpec, RootClass
from .weyl import (
    classical_weyl_orbit,
    dominant_conjugate,
    expand_denominator,
    signed_orbit,
    singular_weights,
)

# Algebras exercised by the denominator-identity checks.
SHIPPED_ALGEBRAS = (
    AlgebraKind('A', 2),
    AlgebraKind('B', 2),
    AlgebraKind('G', 2),
    AlgebraKind('A', 2, 1),
    AlgebraKind('A', 2, 2),
)


def build_algebra(kind: Union[AlgebraKind, Mapping[str, Any]]) -> AlgebraSpec:
    """
    Build an algebra from a kind or its JSON descriptor.

    Raises:
        UnsupportedAlgebraError: For unknown series, ranks or twists
    """
    if not isinstance(kind, AlgebraKind):
        kind = AlgebraKind.from_dict(kind)
    if kind.is_affine:
        return build_affine(kind.series, kind.rank, kind.twist)
    return build_finite(kind.series, kind.rank)


__all__ = [
    'AlgebraKind',
    'AlgebraSpec',
    'FiniteSeries',
    'RootClass',
    'SHIPPED_ALGEBRAS',
    'build_affine',
    'build_algebra',
    'build_finite',
    'classical_weyl_orbit',
    'dominant_conjugate',
    'expand_denominator',
    'finite_from_simple_roots',
    'signed_orbit',
    'singular_weights',
]
