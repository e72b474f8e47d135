"""
Exact rational linear algebra backed by sympy.

Runtime arithmetic stays on ``fractions.Fraction``; sympy is used for the
handful of matrix inversions and products computed once per algebra or
injection.
"""
from fractions import Fraction
from typing import List, Sequence

import sympy

from ..exceptions import SchemaError

Matrix = List[List[Fraction]]


def to_sympy(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([
        [sympy.Rational(c.numerator, c.denominator) for c in row] for row in rows
    ])


def from_sympy(matrix: sympy.Matrix) -> Matrix:
    out = []
    for i in range(matrix.rows):
        row = []
        for j in range(matrix.cols):
            entry = sympy.Rational(matrix[i, j])
            row.append(Fraction(int(entry.p), int(entry.q)))
        out.append(row)
    return out


def exact_inverse(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """
    Invert a square rational matrix exactly.

    Raises:
        SchemaError: If the matrix is singular
    """
    if not rows:
        return []
    matrix = to_sympy(rows)
    if matrix.det() == 0:
        raise SchemaError("Matrix is singular; the given vectors are not independent")
    return from_sympy(matrix.inv())


def exact_product(left: Sequence[Sequence[Fraction]], right: Sequence[Sequence[Fraction]]) -> Matrix:
    return from_sympy(to_sympy(left) * to_sympy(right))


def gram_matrix(vectors: Sequence[Sequence[Fraction]], form) -> Matrix:
    """Matrix of pairwise values ``form.finite_inner(v_i, v_j)``."""
    return [[form.finite_inner(a, b) for b in vectors] for a in vectors]
