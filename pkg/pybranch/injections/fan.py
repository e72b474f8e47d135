"""
The carrier Φ of an injection and its fan Γ.

    Π_{α ∈ π∘Δ⁺} (1 − e^{−α})^{mult(α) − mult_a(α)} = −Σ_{γ∈Φ} s(γ) e^{−γ}

The fan is Φ shifted by its lowest vector γ0, with γ0 itself removed.
"""
from fractions import Fraction
from typing import Dict
import logging

from .spec import InjectionSpec
from ..exceptions import InjectionError, WeightError
from ..models.lattice import SignedSeries, Weight, series_mul_truncated, to_fraction
from ..models.results import Fan

logger = logging.getLogger(__name__)


def projected_root_exponents(inj: InjectionSpec, cutoff: Fraction) -> Dict[Weight, int]:
    """Net exponents mult(α) − mult_a(α) over projected positive roots up to ``cutoff``."""
    exponents: Dict[Weight, int] = {}
    for root, mult in inj.ambient.positive_roots(cutoff / inj.grade_scale):
        image = inj.project(root)
        if image.is_zero():
            raise InjectionError(f"{inj.name}: positive root {root} projects to zero")
        exponents[image] = exponents.get(image, 0) + mult

    for root, mult in inj.sub.positive_roots(cutoff):
        available = exponents.get(root, 0)
        if available == 0:
            raise InjectionError(
                f"{inj.name}: positive root {root} of {inj.sub.label} is not a projected root of "
                f"{inj.ambient.label}"
            )
        if available < mult:
            raise InjectionError(
                f"{inj.name}: negative net exponent {available - mult} at {root}; "
                f"geometric-series expansion is not supported"
            )
        exponents[root] = available - mult
    return {w: n for w, n in exponents.items() if n}


def compute_phi(inj: InjectionSpec, cutoff=0) -> SignedSeries:
    """
    Compute the signed carrier s: Φ → {±1, ...} up to grade ``cutoff``.

    Args:
        inj: The injection a ⊂ g
        cutoff: Highest grade of carrier vectors (ignored for finite injections)

    Returns:
        SignedSeries keyed by γ ∈ Φ with value s(γ)

    Raises:
        InjectionError: If a sub root is missing or an exponent is negative
    """
    cutoff = to_fraction(cutoff)
    if cutoff < 0:
        raise WeightError(f"Fan cutoff must be nonnegative, got {cutoff}")
    if not inj.ambient.is_affine:
        cutoff = Fraction(0)

    exponents = projected_root_exponents(inj, cutoff)
    zero = Weight.zero(inj.sub.ambient_dim)
    product = SignedSeries.one(inj.sub.ambient_dim)
    for weight in sorted(exponents, key=inj.height_key):
        factor = SignedSeries({zero: 1, -weight: -1})
        for _ in range(exponents[weight]):
            product = series_mul_truncated(product, factor, -cutoff)

    phi = SignedSeries({-w: -c for w, c in product.items()})
    logger.debug(f"{inj.name}: carrier has {len(phi)} vectors up to grade {cutoff}")

    if not inj.sub.classical_positive_roots:
        grade_zero = sum(1 for w in phi if w.grade == 0)
        if grade_zero != inj.ambient.weyl_order:
            logger.warning(
                f"{inj.name}: grade-0 carrier has {grade_zero} vectors, expected "
                f"|W| = {inj.ambient.weyl_order}"
            )
    return phi


def build_fan(phi: SignedSeries, inj: InjectionSpec, cutoff=None) -> Fan:
    """
    Select γ0 and shift the carrier into the fan.

    Args:
        phi: Signed carrier from compute_phi
        inj: The injection, supplying the height order
        cutoff: Grade up to which phi is complete (defaults to its top grade)

    Returns:
        Fan with entries in increasing height order

    Raises:
        InjectionError: For an empty carrier, ties or non-positive fan vectors
    """
    if not phi:
        raise InjectionError(f"{inj.name}: empty carrier, the projected denominator vanished")
    order = inj.height_order
    ranked = sorted(phi.items(), key=lambda item: order.key(item[0]))
    keys = [order.key(w) for w, _ in ranked]
    for lower, upper in zip(keys, keys[1:]):
        if lower == upper:
            raise InjectionError(f"{inj.name}: carrier vectors tie under the height order")

    gamma0, s0 = ranked[0]
    entries = []
    for gamma, sign in ranked[1:]:
        shifted = gamma - gamma0
        if not order.is_positive(shifted) or shifted.grade < 0:
            raise InjectionError(f"{inj.name}: fan vector {shifted} is not positive")
        entries.append((shifted, sign))

    if (
        inj.ambient.classical_rank == inj.sub.classical_rank
        and gamma0.is_zero()
        and s0 != -1
    ):
        raise InjectionError(f"{inj.name}: equal-rank fan with γ0 = 0 must have s(γ0) = −1, got {s0}")

    top = phi.top_grade() - gamma0.grade
    fan_cutoff = top if cutoff is None else to_fraction(cutoff)
    logger.debug(f"{inj.name}: γ0 = {gamma0}, s0 = {s0}, {len(entries)} fan vectors")
    return Fan(gamma0, s0, tuple(entries), fan_cutoff, order)
