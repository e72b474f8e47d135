"""
Reductive embeddings a ⊂ g and the projection π_a: P → P_a.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import logging

from ..algebras import AlgebraKind, AlgebraSpec, build_algebra, finite_from_simple_roots
from ..exceptions import DimensionMismatchError, InjectionError, SchemaError
from ..models.lattice import GramForm, HeightOrder, Weight, format_fraction, to_fraction
from ..utils.linalg import exact_product

logger = logging.getLogger(__name__)

MatrixRows = Tuple[Tuple[Fraction, ...], ...]


def _identity_rows(size: int) -> List[List[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def _full_matrix(
    finite: Sequence[Sequence[Any]],
    sub_dim: int,
    ambient_dim: int,
    level_scale: Any,
    grade_scale: Any,
) -> MatrixRows:
    """Embed a finite block into the (finite ⊕ level ⊕ grade) matrix."""
    if len(finite) != sub_dim or any(len(row) != ambient_dim for row in finite):
        raise SchemaError(
            f"Projection block must be {sub_dim} x {ambient_dim}, got "
            f"{len(finite)} x {len(finite[0]) if finite else 0}"
        )
    rows = []
    for row in finite:
        rows.append(tuple(to_fraction(c) for c in row) + (Fraction(0), Fraction(0)))
    zeros = (Fraction(0),) * ambient_dim
    rows.append(zeros + (to_fraction(level_scale), Fraction(0)))
    rows.append(zeros + (Fraction(0), to_fraction(grade_scale)))
    return tuple(rows)


@dataclass(frozen=True)
class InjectionSpec:
    """
    An embedding a ⊂ g given by its projection matrix.

    ``projection`` acts on (finite ⊕ level ⊕ grade) coordinates. With
    ``embedded`` set, a lives inside g's ambient space and the finite block
    is an idempotent projection; otherwise the block is an explicit change
    of coordinates into a's ambient basis.
    """
    name: str
    ambient: AlgebraSpec
    sub: AlgebraSpec
    projection: MatrixRows
    embedded: bool = False

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(c) for c in row) for row in self.projection)
        object.__setattr__(self, 'projection', rows)
        self._validate()

    # -- construction -----------------------------------------------------

    @classmethod
    def from_blocks(
        cls,
        name: str,
        ambient: AlgebraSpec,
        sub: AlgebraSpec,
        finite: Sequence[Sequence[Any]],
        level_scale: Any = 1,
        grade_scale: Any = 1,
        embedded: bool = False,
    ) -> 'InjectionSpec':
        matrix = _full_matrix(finite, sub.ambient_dim, ambient.ambient_dim, level_scale, grade_scale)
        return cls(name, ambient, sub, matrix, embedded)

    @classmethod
    def identity(cls, spec: AlgebraSpec) -> 'InjectionSpec':
        """The trivial injection g ⊂ g."""
        size = spec.ambient_dim
        return cls.from_blocks(f"{spec.label}-in-{spec.label}", spec, spec, _identity_rows(size), embedded=True)

    @classmethod
    def cartan(cls, spec: AlgebraSpec) -> 'InjectionSpec':
        """The Cartan subalgebra h ⊂ g; branching to it yields weight multiplicities."""
        size = spec.ambient_dim
        return cls.from_blocks(
            f"h-in-{spec.label}", spec, spec.cartan_subalgebra(), _identity_rows(size), embedded=True
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'InjectionSpec':
        """
        Read an injection JSON document.

        The projection may be the finite block (sub_dim x ambient_dim) together
        with ``level_scale`` and ``grade_scale``, or the full matrix.

        Raises:
            SchemaError: For malformed documents
            UnsupportedAlgebraError: For unknown algebras
        """
        if isinstance(data, Mapping) and 'preset' in data:
            from .presets import get_preset
            return get_preset(str(data['preset']))
        try:
            ambient_data = data['ambient']
            sub_data = data['sub']
            matrix = data['projection']
        except (KeyError, TypeError) as e:
            raise SchemaError(f"Injection JSON needs 'ambient', 'sub' and 'projection': {e}") from e
        ambient = build_algebra(ambient_data)
        sub = _sub_algebra(sub_data, ambient)
        embedded = bool(data.get('embedded', False))
        name = str(data.get('name', f"{sub.label}-in-{ambient.label}"))
        if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
            raise SchemaError("Injection 'projection' must be a list of rows")
        if len(matrix) == sub.ambient_dim + 2 and all(len(r) == ambient.ambient_dim + 2 for r in matrix):
            if 'level_scale' in data or 'grade_scale' in data:
                raise SchemaError("Give either a full projection matrix or scales, not both")
            return cls(name, ambient, sub, tuple(tuple(r) for r in matrix), embedded)
        return cls.from_blocks(
            name,
            ambient,
            sub,
            matrix,
            data.get('level_scale', 1),
            data.get('grade_scale', 1),
            embedded,
        )

    def to_dict(self) -> Dict[str, Any]:
        sub = self.sub.kind.to_dict()
        sub['simple_roots'] = [[format_fraction(c) for c in r.finite] for r in self.sub.simple_roots]
        sub['gram'] = self.sub.gram.to_list()
        return {
            'name': self.name,
            'ambient': self.ambient.kind.to_dict(),
            'sub': sub,
            'projection': [[format_fraction(c) for c in row] for row in self.projection],
            'embedded': self.embedded,
        }

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        rows = self.projection
        d_sub, d_amb = self.sub.ambient_dim, self.ambient.ambient_dim
        if len(rows) != d_sub + 2 or any(len(row) != d_amb + 2 for row in rows):
            raise SchemaError(
                f"Projection for {self.name} must be {d_sub + 2} x {d_amb + 2} "
                f"(finite + level + grade)"
            )
        if self.ambient.is_affine != self.sub.is_affine:
            raise InjectionError(
                f"{self.name}: ambient {self.ambient.label} and sub {self.sub.label} must both be "
                f"finite or both affine"
            )
        level_row, grade_row = rows[d_sub], rows[d_sub + 1]
        if any(level_row[:d_amb]) or level_row[d_amb + 1] != 0:
            raise InjectionError(f"{self.name}: the level of π(λ) may only depend on the level of λ")
        if any(grade_row[:d_amb + 1]):
            raise InjectionError(f"{self.name}: the grade of π(λ) may only depend on the grade of λ")
        if any(row[d_amb + 1] for row in rows[:d_sub + 1]):
            raise InjectionError(f"{self.name}: π must map δ to a multiple of δ")
        if self.grade_scale <= 0:
            raise InjectionError(f"{self.name}: grade scale must be positive, got {self.grade_scale}")
        if self.ambient.is_affine and self.level_scale <= 0:
            raise InjectionError(f"{self.name}: level scale must be positive, got {self.level_scale}")
        if self.embedded:
            if d_sub != d_amb:
                raise InjectionError(f"{self.name}: embedded injections share the ambient space")
            block = [list(row[:d_amb]) for row in rows[:d_sub]]
            if exact_product(block, block) != block:
                raise InjectionError(f"{self.name}: embedded projection is not idempotent")
        if self.ambient.classical_simple_roots:
            image = Weight(self.project(self.ambient.rho).finite)
            if not self.height_order.is_positive(image):
                raise InjectionError(f"{self.name}: projected Weyl vector {image} is not positive")

    # -- projection -------------------------------------------------------

    @property
    def level_scale(self) -> Fraction:
        return self.projection[self.sub.ambient_dim][self.ambient.ambient_dim]

    @property
    def grade_scale(self) -> Fraction:
        return self.projection[-1][-1]

    def project(self, weight: Weight) -> Weight:
        """
        Apply π_a to an ambient weight.

        Raises:
            DimensionMismatchError: If the weight is not an ambient weight
        """
        if weight.dim != self.ambient.ambient_dim:
            raise DimensionMismatchError(
                f"{self.name} projects {self.ambient.ambient_dim}-dimensional weights, got {weight.dim}"
            )
        coords = weight.finite + (weight.level, weight.grade)
        image = [
            sum((m * c for m, c in zip(row, coords) if m), Fraction(0)) for row in self.projection
        ]
        return Weight(tuple(image[:-2]), image[-2], image[-1])

    @cached_property
    def height_order(self) -> HeightOrder:
        """
        Grade-major order ranked by (·|ρ_a), then by (·|π(ρ_g)).

        The second functional separates vectors orthogonal to ρ_a, such as
        α2 for A2 ⊂ G2.
        """
        gram = self.sub.gram.matrix
        functionals = []
        for vector in (self.sub.rho.finite, self.project(self.ambient.rho).finite):
            functionals.append(tuple(
                sum((gram[i][j] * vector[j] for j in range(len(vector))), Fraction(0))
                for i in range(len(vector))
            ))
        return HeightOrder(tuple(functionals))

    def height_key(self, weight: Weight) -> Tuple[Fraction, ...]:
        return self.height_order.key(weight)


def _sub_algebra(data: Mapping[str, Any], ambient: AlgebraSpec) -> AlgebraSpec:
    """Build the subalgebra, honoring an explicit simple-root realization."""
    if not isinstance(data, Mapping):
        raise SchemaError(f"Sub-algebra descriptor must be an object, got {data!r}")
    kind = AlgebraKind.from_dict(data)
    if 'simple_roots' not in data:
        return build_algebra(kind)
    if kind.is_affine:
        raise SchemaError("Explicit simple roots are only supported for finite subalgebras")
    gram = GramForm(tuple(tuple(row) for row in data['gram'])) if 'gram' in data else ambient.gram
    roots = [tuple(to_fraction(c) for c in root) for root in data['simple_roots']]
    if len(roots) != kind.rank:
        raise SchemaError(f"{kind.label} needs {kind.rank} simple roots, got {len(roots)}")
    return finite_from_simple_roots(kind, roots, gram)
