"""
Algebra descriptors and root data.

An AlgebraSpec stores the simple roots of a finite or affine algebra in an
orthogonal ambient basis together with the bilinear form, the Weyl vector and
the data needed to enumerate roots and Weyl orbits. Affine specs list α0 first.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import logging

from ..exceptions import DimensionMismatchError, SchemaError, UnsupportedAlgebraError
from ..models.lattice import GramForm, Weight, inner, to_fraction
from ..utils.linalg import exact_inverse, gram_matrix

logger = logging.getLogger(__name__)

SERIES_NAMES = ('A', 'B', 'C', 'D', 'G', 'H')


@dataclass(frozen=True)
class AlgebraKind:
    """Series tag, rank and twist (0 for finite algebras)."""
    series: str
    rank: int
    twist: int = 0

    @property
    def is_affine(self) -> bool:
        return self.twist > 0

    @property
    def label(self) -> str:
        base = f"{self.series}{self.rank}"
        return f"{base}^({self.twist})" if self.twist else base

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'series': self.series, 'rank': self.rank}
        if self.twist:
            data['twist'] = self.twist
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'AlgebraKind':
        """
        Read a JSON algebra descriptor such as {"series": "A", "rank": 2, "twist": 1}.

        Raises:
            SchemaError: If a field is missing or has the wrong type
        """
        try:
            series = str(data['series']).strip().upper()
            rank = data.get('rank')
        except (KeyError, TypeError, AttributeError) as e:
            raise SchemaError(f"Algebra descriptor needs 'series' and 'rank': {data!r}") from e
        if series == 'G2':
            series, rank = 'G', 2 if rank is None else rank
        twist = data.get('twist', 0) or 0
        if isinstance(rank, bool) or not isinstance(rank, int):
            raise SchemaError(f"Algebra rank must be an integer, got {rank!r}")
        if isinstance(twist, bool) or not isinstance(twist, int):
            raise SchemaError(f"Algebra twist must be an integer, got {twist!r}")
        return cls(series, rank, twist)


@dataclass(frozen=True)
class RootClass:
    """Affine real roots α̊ + nδ with n ≡ residue (mod modulus)."""
    finite: Tuple[Fraction, ...]
    residue: int = 0
    modulus: int = 1

    def admits(self, grade: Fraction) -> bool:
        if grade.denominator != 1:
            return False
        return (grade.numerator - self.residue) % self.modulus == 0


def coroot(form: GramForm, root: Weight) -> Weight:
    return root.scale(Fraction(2) / inner(form, root, root))


def fundamental_coweights(roots: Sequence[Weight], form: GramForm) -> List[Tuple[Fraction, ...]]:
    """
    Dual basis ω_i^∨ of the simple roots inside their span.

    (α_j | ω_i^∨) = δ_ij, so (v | ω_i^∨) reads off simple-root coordinates.
    """
    vectors = [r.finite for r in roots]
    inverse = exact_inverse(gram_matrix(vectors, form))
    dim = form.dim
    coweights = []
    for i in range(len(vectors)):
        coweights.append(tuple(
            sum((inverse[i][j] * vectors[j][k] for j in range(len(vectors))), Fraction(0))
            for k in range(dim)
        ))
    return coweights


def classical_fundamental_weights(roots: Sequence[Weight], form: GramForm) -> List[Weight]:
    coweights = fundamental_coweights(roots, form)
    weights = []
    for root, coweight in zip(roots, coweights):
        half_norm = inner(form, root, root) / 2
        weights.append(Weight(tuple(half_norm * c for c in coweight)))
    return weights


@dataclass(frozen=True)
class AlgebraSpec:
    """
    Root data of a finite or affine algebra.

    For affine kinds ``simple_roots[0]`` is α0 and ``real_root_classes``
    lists the classical parts of the real roots with their allowed grades.
    """
    kind: AlgebraKind
    ambient_dim: int
    gram: GramForm
    simple_roots: Tuple[Weight, ...]
    rho: Weight
    classical_rank: int
    translation_basis: Tuple[Weight, ...] = ()
    imaginary_multiplicity: int = 0
    real_root_classes: Tuple[RootClass, ...] = ()

    def __post_init__(self):
        if self.gram.dim != self.ambient_dim:
            raise DimensionMismatchError(
                f"Gram form has dimension {self.gram.dim}, expected {self.ambient_dim}"
            )
        for root in self.simple_roots:
            if root.dim != self.ambient_dim:
                raise DimensionMismatchError(f"Simple root {root} is not {self.ambient_dim}-dimensional")

    # -- basic data -------------------------------------------------------

    @property
    def label(self) -> str:
        return self.kind.label

    @property
    def is_affine(self) -> bool:
        return self.kind.is_affine

    @property
    def delta(self) -> Weight:
        return Weight.delta(self.ambient_dim)

    def zero(self) -> Weight:
        return Weight.zero(self.ambient_dim)

    def inner(self, a: Weight, b: Weight) -> Fraction:
        return inner(self.gram, a, b)

    def norm(self, a: Weight) -> Fraction:
        return inner(self.gram, a, a)

    def check_weight(self, weight: Weight) -> None:
        if weight.dim != self.ambient_dim:
            raise DimensionMismatchError(
                f"{self.label} weights have {self.ambient_dim} coordinates, got {weight.dim}"
            )

    @property
    def classical_simple_roots(self) -> Tuple[Weight, ...]:
        if self.is_affine and self.simple_roots:
            return self.simple_roots[1:]
        return self.simple_roots

    @property
    def affine_root(self) -> Optional[Weight]:
        if self.is_affine and self.simple_roots:
            return self.simple_roots[0]
        return None

    @cached_property
    def coroots(self) -> Tuple[Weight, ...]:
        return tuple(coroot(self.gram, root) for root in self.simple_roots)

    @cached_property
    def classical_coroots(self) -> Tuple[Weight, ...]:
        return tuple(coroot(self.gram, root) for root in self.classical_simple_roots)

    def cartan_matrix(self) -> List[List[Fraction]]:
        """Entries 2(α_i|α_j)/(α_j|α_j)."""
        roots = self.simple_roots
        return [
            [2 * self.inner(a, b) / self.norm(b) for b in roots] for a in roots
        ]

    # -- coordinates ------------------------------------------------------

    @cached_property
    def classical_coweights(self) -> Tuple[Tuple[Fraction, ...], ...]:
        if not self.classical_simple_roots:
            return ()
        return tuple(fundamental_coweights(self.classical_simple_roots, self.gram))

    @cached_property
    def fundamental_weights(self) -> Tuple[Weight, ...]:
        """ω_1..ω_r for finite kinds; ω_0..ω_r for affine kinds."""
        if not self.classical_simple_roots:
            return ()
        classical = classical_fundamental_weights(self.classical_simple_roots, self.gram)
        if not self.is_affine:
            return tuple(classical)
        alpha0 = self.affine_root
        g0 = alpha0.grade
        omega0 = Weight(self.zero().finite, self.norm(alpha0) / (2 * g0), 0)
        affine = [omega0]
        for weight in classical:
            level = -self.gram.finite_inner(weight.finite, alpha0.finite) / g0
            affine.append(Weight(weight.finite, level, 0))
        return tuple(affine)

    def fw_coordinates(self, weight: Weight) -> Tuple[Fraction, ...]:
        """Pairings (λ|α_i^∨) with every simple coroot."""
        return tuple(self.inner(weight, c) for c in self.coroots)

    def from_fw(self, coefficients: Sequence[Any], grade: Any = 0) -> Weight:
        """
        Build Σ c_i ω_i (+ grade·δ) from fundamental-weight coordinates.

        Raises:
            DimensionMismatchError: If the number of coefficients is wrong
        """
        basis = self.fundamental_weights
        if len(coefficients) != len(basis):
            raise DimensionMismatchError(
                f"{self.label} takes {len(basis)} fundamental-weight coordinates, "
                f"got {len(coefficients)}"
            )
        total = self.zero()
        for c, omega in zip(coefficients, basis):
            total = total + omega.scale(to_fraction(c))
        return total.shift_grade(grade)

    def root_coordinates(self, weight: Weight) -> Optional[Tuple[Fraction, ...]]:
        """Coefficients of the classical part in the classical simple roots, if it lies in their span."""
        coweights = self.classical_coweights
        coords = tuple(self.gram.finite_inner(weight.finite, c) for c in coweights)
        rebuilt = [Fraction(0)] * self.ambient_dim
        for c, root in zip(coords, self.classical_simple_roots):
            for k, x in enumerate(root.finite):
                rebuilt[k] += c * x
        if tuple(rebuilt) != weight.finite:
            return None
        return coords

    # -- reflections and chambers -----------------------------------------

    def reflect(self, weight: Weight, index: int) -> Weight:
        root = self.simple_roots[index]
        return weight - root.scale(self.inner(weight, self.coroots[index]))

    def dot_reflect(self, weight: Weight, index: int) -> Weight:
        """The ρ-shifted reflection s_i∘λ = s_i(λ+ρ)−ρ."""
        root = self.simple_roots[index]
        return weight - root.scale(self.inner(weight + self.rho, self.coroots[index]))

    def is_dominant(self, weight: Weight) -> bool:
        return all(p >= 0 for p in self.fw_coordinates(weight))

    def is_dominant_integral(self, weight: Weight) -> bool:
        return all(p >= 0 and p.denominator == 1 for p in self.fw_coordinates(weight))

    # -- roots ------------------------------------------------------------

    @cached_property
    def classical_positive_roots(self) -> Tuple[Weight, ...]:
        """Positive roots of the classical part, by height then coordinates."""
        simple = self.classical_simple_roots
        if not simple:
            return ()
        coroots = self.classical_coroots
        seen = set(simple)
        queue = deque(simple)
        while queue:
            root = queue.popleft()
            for alpha, alpha_v in zip(simple, coroots):
                image = root - alpha.scale(self.inner(root, alpha_v))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        positive = []
        for root in seen:
            coords = self.root_coordinates(root)
            if all(c >= 0 for c in coords):
                positive.append((sum(coords), coords, root))
        positive.sort(key=lambda item: (item[0], item[1]))
        return tuple(root for _, _, root in positive)

    @property
    def highest_root(self) -> Weight:
        return self.classical_positive_roots[-1]

    @cached_property
    def weyl_order(self) -> int:
        """Order of the classical Weyl group W̊ (size of the orbit of ρ̊)."""
        simple = self.classical_simple_roots
        if not simple:
            return 1
        start = Weight(self.rho.finite)
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for alpha, alpha_v in zip(simple, self.classical_coroots):
                image = v - alpha.scale(self.inner(v, alpha_v))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return len(seen)

    def positive_roots(self, max_grade: Any = 0) -> List[Tuple[Weight, int]]:
        """
        Positive roots with their multiplicities, up to ``max_grade`` for affine kinds.

        Grade-0 roots come first, then increasing grade.
        """
        roots = [(root, 1) for root in self.classical_positive_roots]
        if not self.is_affine:
            return roots
        top = to_fraction(max_grade)
        dim = self.ambient_dim
        grade = 1
        while grade <= top:
            n = Fraction(grade)
            for cls in self.real_root_classes:
                if cls.admits(n):
                    roots.append((Weight(cls.finite, 0, n), 1))
            if self.imaginary_multiplicity:
                roots.append((Weight((Fraction(0),) * dim, 0, n), self.imaginary_multiplicity))
            grade += 1
        return roots

    @cached_property
    def _classical_root_set(self) -> frozenset:
        positive = {r.finite for r in self.classical_positive_roots}
        return frozenset(positive | {tuple(-c for c in f) for f in positive})

    def multiplicity(self, root: Weight) -> int:
        """Root multiplicity; 0 for vectors that are not roots."""
        if root.level != 0:
            return 0
        if not self.is_affine:
            return 1 if root.grade == 0 and root.finite in self._classical_root_set else 0
        if not any(root.finite):
            return self.imaginary_multiplicity if root.grade != 0 else 0
        return 1 if any(
            cls.finite == root.finite and cls.admits(root.grade) for cls in self.real_root_classes
        ) else 0

    # -- translations ------------------------------------------------------

    @cached_property
    def translation_dual(self) -> Tuple[List[List[Fraction]], List[List[Fraction]]]:
        """Gram matrix of the translation basis and its inverse."""
        vectors = [b.finite for b in self.translation_basis]
        matrix = gram_matrix(vectors, self.gram)
        return matrix, exact_inverse(matrix)

    def cartan_subalgebra(self) -> 'AlgebraSpec':
        """The toral subalgebra sharing this spec's ambient space and grading."""
        return AlgebraSpec(
            kind=AlgebraKind('H', self.classical_rank, self.kind.twist),
            ambient_dim=self.ambient_dim,
            gram=self.gram,
            simple_roots=(),
            rho=self.zero(),
            classical_rank=0,
        )
