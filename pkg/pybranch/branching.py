"""
Recursion engine for anomalous branching coefficients and their extraction.

The anomalous coefficients k_ξ are defined by

    π(Ψ^(μ)) = −Σ_ξ Σ_{γ∈Φ} s(γ) k_ξ e^{ξ−γ}

and satisfy k_ν = b_ν on the dominant chamber of the subalgebra. Both
recursions below are the same triangular solve: each k_ξ is fixed by sources
at ξ and by coefficients strictly higher in a translation-invariant order.
"""
from fractions import Fraction
from itertools import count
from typing import Dict, List, Optional, Sequence, Tuple
import heapq
import logging

from .algebras import AlgebraSpec, singular_weights
from .exceptions import BranchingError, InjectionError, WindowError
from .injections import InjectionSpec, build_fan, compute_phi
from .models.lattice import (
    HeightOrder, SignedSeries, Weight, series_mul_truncated, to_fraction
)
from .models.results import (
    AnomalousTable, BranchingResult, Fan, FiniteModuleDiagram, Window
)

logger = logging.getLogger(__name__)

# Upper bound on swept weights before a sweep is considered runaway.
DEFAULT_MAX_TERMS = 500_000

Shift = Tuple[Weight, int]


def _sweep(
    sources: SignedSeries,
    shifts: Sequence[Shift],
    lead: int,
    order: HeightOrder,
    window: Window,
    max_terms: Optional[int] = None,
) -> Tuple[Dict[Weight, int], int]:
    """
    Solve lead·k_ξ = sources(ξ) − Σ c·k_{ξ+shift} in decreasing order.

    Every shift must be positive under ``order``. Weights outside the window
    are never evaluated.

    Returns:
        The nonzero coefficients and the number of evaluated weights
    """
    limit = max_terms or DEFAULT_MAX_TERMS
    ranked = sorted(shifts, key=lambda item: item[0].grade)
    top = window.top_grade

    heap: List[Tuple[Tuple[Fraction, ...], int, Weight]] = []
    queued = set()
    tiebreak = count()

    def push(weight: Weight) -> None:
        if weight in queued or not window.contains(weight):
            return
        queued.add(weight)
        heapq.heappush(heap, (tuple(-c for c in order.key(weight)), next(tiebreak), weight))

    for weight in sources:
        push(weight)

    table: Dict[Weight, int] = {}
    swept = 0
    while heap:
        _, _, xi = heapq.heappop(heap)
        swept += 1
        if swept > limit:
            raise WindowError(f"Sweep exceeded {limit} weights; lower the cutoff or raise max_terms")

        total = sources.coefficient(xi)
        for shift, coefficient in ranked:
            if xi.grade + shift.grade > top:
                break
            known = table.get(xi + shift)
            if known:
                total -= coefficient * known

        value, remainder = divmod(total, lead)
        if remainder:
            raise BranchingError(f"Inexact division {total}/{lead} at {xi}")
        if value:
            table[xi] = value
            for shift, _ in ranked:
                push(xi - shift)

    return table, swept


def _effective_window(sources: SignedSeries, window: Optional[Window]) -> Window:
    """Clamp the top of the window to the sources; default the floor to their floor."""
    top = sources.top_grade()
    if top is None:
        top = window.top_grade if window else Fraction(0)
    if window is not None:
        return Window(window.min_grade, top)
    floor = sources.floor
    return Window(top if floor is None else floor, top)


def anomalous_coefficients(
    psi_projected: SignedSeries,
    fan: Fan,
    window: Optional[Window] = None,
    max_terms: Optional[int] = None,
) -> AnomalousTable:
    """
    Anomalous coefficients through the fan recursion.

        k_ξ = −(1/s0)(πΨ(ξ − γ0) + Σ_{γ∈Γ} s(γ+γ0) k_{ξ+γ})

    Args:
        psi_projected: π(Ψ^(μ)), complete down to its floor
        fan: Fan of the injection
        window: Grade range to fill (defaults to the floor of the sources)
        max_terms: Safety limit on evaluated weights

    Returns:
        AnomalousTable, complete on the window

    Raises:
        InjectionError: If s0 is zero
        WindowError: If the fan or Ψ does not reach the window floor
        BranchingError: On an inexact division
    """
    if fan.s0 == 0:
        raise InjectionError("Fan has s(γ0) = 0")
    sources = (-psi_projected).shifted(fan.gamma0)
    effective = _effective_window(sources, window)

    if sources.floor is not None and sources.floor > effective.min_grade:
        raise WindowError(
            f"Projected singular element is only complete down to grade {sources.floor}, "
            f"above the window floor {effective.min_grade}"
        )
    if effective.depth > fan.cutoff:
        raise WindowError(
            f"Fan is truncated at grade {fan.cutoff}, but the window has depth {effective.depth}"
        )

    table, swept = _sweep(sources, fan.entries, fan.s0, fan.order, effective, max_terms)
    logger.debug(
        f"Fan sweep evaluated {swept} weights on grades [{effective.min_grade}, "
        f"{effective.top_grade}], {len(table)} nonzero"
    )
    return AnomalousTable(table, effective, swept)


def anomalous_coefficients_star(
    psi_projected: SignedSeries,
    ambient_psi0: SignedSeries,
    sub: AlgebraSpec,
    window: Optional[Window] = None,
    order: Optional[HeightOrder] = None,
    max_terms: Optional[int] = None,
) -> AnomalousTable:
    """
    Anomalous coefficients from [π(Ψ^(0))·K] = [π(Ψ^(μ))·Ψ_a^(0)].

    Args:
        psi_projected: π(Ψ^(μ))
        ambient_psi0: π(Ψ^(0)) of the ambient algebra, deep enough for the window
        sub: The subalgebra, whose Ψ_a^(0) is expanded here
        window: Grade range to fill (defaults to the floor of psi_projected)
        order: Grade-major order used to pick the leading term
        max_terms: Safety limit on evaluated weights

    Raises:
        WindowError: If either series does not reach the window floor
        BranchingError: On an inexact division
    """
    if not ambient_psi0:
        raise InjectionError("Projected ambient denominator vanished")
    order = order or HeightOrder()
    sigma_max, lead = max(ambient_psi0.items(), key=lambda item: order.key(item[0]))

    effective = _effective_window(psi_projected.shifted(-sigma_max), window)
    if psi_projected.floor is not None and psi_projected.floor > effective.min_grade + sigma_max.grade:
        raise WindowError(
            f"Projected singular element is only complete down to grade {psi_projected.floor}"
        )
    needed = sigma_max.grade - effective.depth
    if ambient_psi0.floor is not None and ambient_psi0.floor > needed:
        raise WindowError(
            f"Projected ambient denominator is complete down to grade {ambient_psi0.floor}, "
            f"needed {needed}"
        )

    rhs_floor = effective.min_grade + sigma_max.grade
    top = psi_projected.top_grade() or Fraction(0)
    sub_cutoff = max(top - rhs_floor, Fraction(0)) if sub.is_affine else 0
    sub_psi0 = singular_weights(sub, sub.zero(), sub_cutoff).series
    rhs = series_mul_truncated(psi_projected, sub_psi0, rhs_floor)

    sources = rhs.shifted(-sigma_max)
    shifts = [(sigma_max - sigma, c) for sigma, c in ambient_psi0.items() if sigma != sigma_max]
    table, swept = _sweep(sources, shifts, lead, order, effective, max_terms)
    logger.debug(f"Star sweep evaluated {swept} weights, {len(table)} nonzero")
    return AnomalousTable(table, effective, swept)


def extract_branching(table: AnomalousTable, sub: AlgebraSpec) -> BranchingResult:
    """
    Read branching coefficients off the dominant chamber of the subalgebra.

    Raises:
        BranchingError: If a dominant coefficient is negative
    """
    top = table.window.top_grade
    coefficients: Dict[Weight, int] = {}
    by_class: Dict[Weight, Dict[Fraction, int]] = {}
    fw_labels: Dict[Weight, Tuple[Fraction, ...]] = {}

    for weight, value in table.coefficients.items():
        if not sub.is_dominant_integral(weight):
            continue
        if value < 0:
            raise BranchingError(f"Negative branching coefficient {value} at {weight}")
        coefficients[weight] = value
        label = Weight(weight.finite, weight.level, top if sub.is_affine else weight.grade)
        by_class.setdefault(label, {})[label.grade - weight.grade] = value
        if sub.coroots:
            fw_labels[label] = sub.fw_coordinates(label)

    return BranchingResult(coefficients, by_class, sub.label, sub.is_affine, fw_labels)


def branching_functions(result: BranchingResult) -> List[Tuple[Weight, List[Tuple[Fraction, int]]]]:
    """
    Branching functions b_ν(q) = Σ_n b_{ν−nδ} qⁿ, by leading exponent.

    Raises:
        BranchingError: For finite subalgebras
    """
    if not result.affine:
        raise BranchingError(f"Branching functions need an affine subalgebra, got {result.sub_label}")
    return [(label, sorted(result.by_class[label].items())) for label in result.ordered_classes()]


def weight_multiplicities(spec: AlgebraSpec, mu: Weight, cutoff=0) -> FiniteModuleDiagram:
    """
    Weight multiplicities of L^μ as branching to the Cartan subalgebra.

    For affine algebras the diagram holds the weights with grade ≥ grade(μ) − cutoff.
    """
    cutoff = to_fraction(cutoff) if spec.is_affine else Fraction(0)
    inj = InjectionSpec.cartan(spec)
    psi = singular_weights(spec, mu, cutoff).series
    fan = build_fan(compute_phi(inj, cutoff), inj, cutoff)
    window = Window(mu.grade - cutoff, mu.grade)
    table = anomalous_coefficients(psi, fan, window)
    result = extract_branching(table, inj.sub)
    return FiniteModuleDiagram(dict(result.coefficients), mu)


def property_residuals(
    table: AnomalousTable,
    psi_projected: SignedSeries,
    phi: SignedSeries,
    phi_cutoff=None,
) -> Dict[Weight, int]:
    """
    Residuals of π(Ψ^(μ))(λ) + Σ_{γ∈Φ} s(γ) k_{λ+γ} wherever both sides are complete.

    Args:
        table: Computed anomalous coefficients
        psi_projected: π(Ψ^(μ))
        phi: Signed carrier
        phi_cutoff: Grade up to which phi is complete (None when exact)

    Returns:
        The nonzero residuals keyed by λ
    """
    window = table.window
    lowest = phi.bottom_grade() or Fraction(0)
    reach = None if phi_cutoff is None else to_fraction(phi_cutoff)

    candidates = set(psi_projected.support())
    for xi in table.coefficients:
        for gamma in phi:
            candidates.add(xi - gamma)

    residuals: Dict[Weight, int] = {}
    for point in candidates:
        if point.grade + lowest < window.min_grade:
            continue
        if psi_projected.floor is not None and point.grade < psi_projected.floor:
            continue
        if reach is not None and window.top_grade - point.grade > reach:
            continue
        total = psi_projected.coefficient(point)
        for gamma, sign in phi.items():
            total += sign * table.coefficient(point + gamma)
        if total:
            residuals[point] = total
    return residuals
