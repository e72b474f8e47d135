"""
Independent weight-multiplicity oracles for finite algebras.

Freudenthal's formula and the Weyl dimension formula check the recursion
engine on finite-dimensional modules.
"""
from collections import deque
from fractions import Fraction
from typing import Dict, List, Set
import logging

from .algebras import AlgebraSpec, dominant_conjugate
from .exceptions import BranchingError, WeightError
from .models.lattice import Weight
from .models.results import FiniteModuleDiagram

logger = logging.getLogger(__name__)


def _check_finite_highest_weight(spec: AlgebraSpec, mu: Weight) -> None:
    if spec.is_affine:
        raise WeightError(f"Oracles only cover finite algebras, got {spec.label}")
    spec.check_weight(mu)
    if not spec.is_dominant_integral(mu):
        raise WeightError(f"Highest weight {mu} is not dominant integral for {spec.label}")


def _plain_orbit(spec: AlgebraSpec, weight: Weight) -> Set[Weight]:
    seen = {weight}
    queue = deque([weight])
    while queue:
        current = queue.popleft()
        for index in range(len(spec.simple_roots)):
            image = spec.reflect(current, index)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def dominant_weights_below(spec: AlgebraSpec, mu: Weight) -> List[Weight]:
    """Dominant weights λ ≤ μ, by increasing depth sum(μ − λ) in simple roots."""
    found = {mu}
    queue = deque([mu])
    while queue:
        current = queue.popleft()
        for alpha in spec.classical_positive_roots:
            lower = current - alpha
            if lower not in found and spec.is_dominant(lower):
                found.add(lower)
                queue.append(lower)

    def depth(weight: Weight) -> Fraction:
        return sum(spec.root_coordinates(mu - weight), Fraction(0))

    return sorted(found, key=lambda w: (depth(w), w.finite))


def freudenthal(spec: AlgebraSpec, mu: Weight) -> FiniteModuleDiagram:
    """
    Weight diagram of L^μ by Freudenthal's recursion.

    Args:
        spec: A finite algebra
        mu: Dominant integral highest weight

    Returns:
        FiniteModuleDiagram over all weights of the module

    Raises:
        WeightError: For affine algebras or a non-dominant μ
    """
    _check_finite_highest_weight(spec, mu)
    rho = spec.rho
    top_norm = spec.norm(mu + rho)
    dominant: Dict[Weight, int] = {}

    def lookup(weight: Weight) -> int:
        return dominant.get(dominant_conjugate(spec, weight), 0)

    for weight in dominant_weights_below(spec, mu):
        if weight == mu:
            dominant[weight] = 1
            continue
        total = Fraction(0)
        for alpha in spec.classical_positive_roots:
            step = weight + alpha
            while True:
                mult = lookup(step)
                if not mult:
                    break
                total += mult * spec.inner(step, alpha)
                step = step + alpha
        value = 2 * total / (top_norm - spec.norm(weight + rho))
        if value.denominator != 1:
            raise BranchingError(f"Freudenthal recursion gave non-integer {value} at {weight}")
        if value:
            dominant[weight] = int(value)

    multiplicities: Dict[Weight, int] = {}
    for weight, mult in dominant.items():
        for image in _plain_orbit(spec, weight):
            multiplicities[image] = mult
    logger.debug(f"{spec.label}: Freudenthal diagram of {mu} has {len(multiplicities)} weights")
    return FiniteModuleDiagram(multiplicities, mu)


def weyl_dimension(spec: AlgebraSpec, mu: Weight) -> int:
    """
    Dimension Π_{α>0} (μ+ρ|α)/(ρ|α).

    Raises:
        WeightError: For affine algebras or a non-dominant μ
        BranchingError: If the product is not an integer
    """
    _check_finite_highest_weight(spec, mu)
    shifted = mu + spec.rho
    value = Fraction(1)
    for alpha in spec.classical_positive_roots:
        value *= spec.inner(shifted, alpha) / spec.inner(spec.rho, alpha)
    if value.denominator != 1:
        raise BranchingError(f"Weyl dimension of {mu} is not an integer: {value}")
    return int(value)
