"""
Weyl orbits, singular-weight elements and denominators.

Weyl group elements are never materialized: orbits are generated by simple
reflections with their signs, and the affine group is enumerated as W̊ ⋉ T
through the translation action
    t_α(λ) = λ + kα − ((λ|α) + ½|α|²k)δ.
"""
from collections import deque
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple
import logging
import math

from .spec import AlgebraSpec
from ..exceptions import WeightError
from ..models.lattice import SignedSeries, Weight, series_mul_truncated, to_fraction
from ..models.results import SingularElement

logger = logging.getLogger(__name__)


def signed_orbit(spec: AlgebraSpec, weight: Weight) -> Optional[List[Tuple[Weight, int]]]:
    """
    Orbit of ``weight`` under the classical Weyl group with signs ε(s).

    Returns None when the weight is fixed by a reflection.
    """
    simple = spec.classical_simple_roots
    coroots = spec.classical_coroots
    signs: Dict[Weight, int] = {weight: 1}
    queue = deque([weight])
    while queue:
        current = queue.popleft()
        sign = signs[current]
        for alpha, alpha_v in zip(simple, coroots):
            pairing = spec.inner(current, alpha_v)
            if pairing == 0:
                return None
            image = current - alpha.scale(pairing)
            if image not in signs:
                signs[image] = -sign
                queue.append(image)
    return list(signs.items())


def classical_weyl_orbit(spec: AlgebraSpec, weight: Weight) -> SignedSeries:
    """
    Signed orbit Σ_{s∈W̊} ε(s) e^{s(w)}.

    For affine specs the classical subgroup acts on the finite part only.
    Singular weights give the empty series.
    """
    spec.check_weight(weight)
    orbit = signed_orbit(spec, weight)
    if orbit is None:
        return SignedSeries()
    return SignedSeries(dict(orbit))


def dominant_conjugate(spec: AlgebraSpec, weight: Weight) -> Weight:
    """Reflect ``weight`` by classical simple reflections into the dominant chamber."""
    simple = spec.classical_simple_roots
    coroots = spec.classical_coroots
    current = weight
    moved = True
    while moved:
        moved = False
        for alpha, alpha_v in zip(simple, coroots):
            pairing = spec.inner(current, alpha_v)
            if pairing < 0:
                current = current - alpha.scale(pairing)
                moved = True
    return current


def _check_highest_weight(spec: AlgebraSpec, mu: Weight, cutoff: Fraction) -> None:
    spec.check_weight(mu)
    if cutoff < 0:
        raise WeightError(f"Grade cutoff must be nonnegative, got {cutoff}")
    if not spec.is_dominant_integral(mu):
        coords = ', '.join(str(c) for c in spec.fw_coordinates(mu))
        raise WeightError(f"Highest weight {mu} is not dominant integral for {spec.label} (fw: {coords})")


def _sqrt_upper(value: Fraction) -> Fraction:
    """A rational r with r ≥ √value, within 1/denominator of it."""
    p, q = value.numerator, value.denominator
    return Fraction(math.isqrt(p * q) + 1, q)


def translations_within(spec: AlgebraSpec, vector: Weight, level: Fraction, max_drop: Fraction) -> Iterator[Tuple[Weight, Fraction]]:
    """
    Translations α ∈ M whose grade drop (v|α) + ½k|α|² is at most ``max_drop``.

    The admissible α form an ellipsoid; each coordinate in the translation
    basis is bounded through the dual basis and the candidates are then
    filtered exactly.
    """
    basis = spec.translation_basis
    gram_b, inverse_b = spec.translation_dual
    size = len(basis)
    pairings = [spec.gram.finite_inner(vector.finite, b.finite) for b in basis]
    dual_pairings = [
        sum((inverse_b[j][m] * pairings[m] for m in range(size)), Fraction(0)) for j in range(size)
    ]
    parallel_norm = sum((d * h for d, h in zip(dual_pairings, pairings)), Fraction(0))
    radius_sq = 2 * max_drop / level + parallel_norm / (level * level)
    if radius_sq < 0:
        return

    ranges = []
    for j in range(size):
        center = -dual_pairings[j] / level
        half_width = _sqrt_upper(radius_sq * inverse_b[j][j])
        low = math.floor(center - half_width)
        high = math.ceil(center + half_width)
        ranges.append(range(low, high + 1))

    for coeffs in product(*ranges):
        linear = sum((c * h for c, h in zip(coeffs, pairings)), Fraction(0))
        quadratic = sum(
            (coeffs[i] * gram_b[i][j] * coeffs[j] for i in range(size) for j in range(size)),
            Fraction(0),
        )
        drop = linear + level * quadratic / 2
        if drop <= max_drop:
            alpha = spec.zero()
            for c, b in zip(coeffs, basis):
                if c:
                    alpha = alpha + b.scale(c)
            yield alpha, drop


def singular_weights(spec: AlgebraSpec, mu: Weight, cutoff=0) -> SingularElement:
    """
    Enumerate Ψ^(μ) = Σ_w ε(w) e^{w∘(μ+ρ)−ρ} down to ``grade(μ) − cutoff``.

    Args:
        spec: Finite or affine algebra
        mu: Dominant integral highest weight
        cutoff: Grade depth below μ (ignored for finite algebras)

    Returns:
        SingularElement whose series holds every singular weight in the window

    Raises:
        WeightError: For non-dominant or non-integral μ, or a negative cutoff
    """
    cutoff = to_fraction(cutoff)
    _check_highest_weight(spec, mu, cutoff)
    if not spec.simple_roots:
        # Toral algebras have a trivial Weyl group.
        floor = mu.grade - cutoff if spec.is_affine else None
        return SingularElement(SignedSeries({mu: 1}, floor=floor), mu, cutoff)
    shifted = mu + spec.rho
    orbit = signed_orbit(spec, shifted)
    if orbit is None:
        raise WeightError(f"μ+ρ = {shifted} is singular; {mu} cannot be a highest weight")

    if not spec.is_affine:
        terms = {image - spec.rho: sign for image, sign in orbit}
        return SingularElement(SignedSeries(terms), mu, cutoff)

    level = shifted.level
    if level <= 0:
        raise WeightError(f"Shifted level {level} must be positive for an integrable module")

    terms: Dict[Weight, int] = {}
    for image, sign in orbit:
        for alpha, drop in translations_within(spec, image, level, cutoff):
            weight = Weight(
                tuple(v + level * a - r for v, a, r in zip(image.finite, alpha.finite, spec.rho.finite)),
                mu.level,
                mu.grade - drop,
            )
            terms[weight] = terms.get(weight, 0) + sign

    series = SignedSeries(terms, floor=mu.grade - cutoff)
    logger.debug(f"{spec.label}: {len(series)} singular weights of {mu} down to depth {cutoff}")
    return SingularElement(series, mu, cutoff)


def expand_denominator(spec: AlgebraSpec, cutoff=0) -> SignedSeries:
    """
    Expand R = Π_{α>0} (1 − e^{−α})^{mult α}, keeping grades ≥ −cutoff.

    Raises:
        WeightError: If the cutoff is negative
    """
    cutoff = to_fraction(cutoff)
    if cutoff < 0:
        raise WeightError(f"Grade cutoff must be nonnegative, got {cutoff}")
    zero = spec.zero()
    result = SignedSeries.one(spec.ambient_dim)
    for root, mult in spec.positive_roots(cutoff):
        factor = SignedSeries({zero: 1, -root: -1})
        for _ in range(mult):
            result = series_mul_truncated(result, factor, -cutoff)
    if spec.is_affine:
        result = result.restrict(-cutoff)
    return result
