"""
Main Brancher class tying singular elements, fans and the recursion together.
"""
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Union
import logging

from .algebras import singular_weights
from .branching import (
    anomalous_coefficients,
    anomalous_coefficients_star,
    extract_branching,
)
from .exceptions import SchemaError
from .injections import InjectionSpec, build_fan, compute_phi, load_injection
from .models.lattice import SignedSeries, Weight, to_fraction
from .models.results import AnomalousTable, BranchingResult, Fan, Window

logger = logging.getLogger(__name__)

METHODS = ('fan', 'star')


class Brancher:
    """
    Branching of highest-weight modules of g to a subalgebra a ⊂ g.

    Fans are cached per cutoff, so branching several modules through the same
    injection builds each fan once.
    """

    def __init__(
        self,
        injection: Union[str, Mapping[str, Any], InjectionSpec],
        max_terms: Optional[int] = None,
    ):
        self.injection = load_injection(injection)
        self.max_terms = max_terms
        self._fans: Dict[Fraction, Fan] = {}

    @property
    def ambient(self):
        return self.injection.ambient

    @property
    def sub(self):
        return self.injection.sub

    def _cutoff(self, cutoff: Any) -> Fraction:
        value = to_fraction(cutoff)
        if not self.ambient.is_affine and value:
            logger.debug(f"Ignoring grade cutoff {value} for finite injection {self.injection.name}")
            return Fraction(0)
        return value

    def fan(self, cutoff: Any = 0) -> Fan:
        """
        Fan of the injection, complete up to grade ``cutoff``.

        Args:
            cutoff: Grade depth in subalgebra units

        Returns:
            Fan carrying the injection's height order
        """
        cutoff = self._cutoff(cutoff)
        if cutoff not in self._fans:
            phi = compute_phi(self.injection, cutoff)
            self._fans[cutoff] = build_fan(phi, self.injection, cutoff)
        return self._fans[cutoff]

    def project_singular(self, mu: Weight, cutoff: Any = 0) -> SignedSeries:
        """
        π(Ψ^(μ)), complete down to grade π(μ) − cutoff.

        Raises:
            WeightError: If μ is not a dominant integral weight of g
        """
        cutoff = self._cutoff(cutoff)
        inj = self.injection
        element = singular_weights(self.ambient, mu, cutoff / inj.grade_scale)
        if not self.ambient.is_affine:
            return element.series.map_weights(inj.project)
        floor = inj.project(mu).grade - cutoff
        return element.series.map_weights(inj.project, floor=floor)

    def window(self, mu: Weight, cutoff: Any = 0) -> Window:
        top = self.injection.project(mu).grade
        return Window(top - self._cutoff(cutoff), top)

    def anomalous(
        self,
        mu: Weight,
        cutoff: Any = 0,
        method: str = 'fan',
        fan_cutoff: Optional[Any] = None,
    ) -> AnomalousTable:
        """
        Anomalous coefficients of L^μ on the window of depth ``cutoff``.

        Args:
            mu: Highest weight of g in ambient coordinates
            cutoff: Grade depth below π(μ)
            method: "fan" for the fan recursion, "star" for the product form
            fan_cutoff: Depth of the fan, defaulting to ``cutoff``

        Raises:
            SchemaError: For an unknown method
            WindowError: If the fan is shallower than the window
        """
        if method not in METHODS:
            raise SchemaError(f"Unknown method '{method}'. Supported: {', '.join(METHODS)}")
        cutoff = self._cutoff(cutoff)
        psi = self.project_singular(mu, cutoff)
        window = self.window(mu, cutoff)
        logger.debug(f"{self.injection.name}: window [{window.min_grade}, {window.top_grade}]")

        if method == 'fan':
            fan = self.fan(cutoff if fan_cutoff is None else fan_cutoff)
            return anomalous_coefficients(psi, fan, window, self.max_terms)

        ambient_psi0 = self.project_singular(self.ambient.zero(), cutoff)
        return anomalous_coefficients_star(
            psi, ambient_psi0, self.sub, window, self.injection.height_order, self.max_terms
        )

    def branch(
        self,
        mu: Weight,
        cutoff: Any = 0,
        method: str = 'fan',
        fan_cutoff: Optional[Any] = None,
    ) -> BranchingResult:
        """
        Branching coefficients of L^μ restricted to the subalgebra.

        Args:
            mu: Highest weight of g in ambient coordinates
            cutoff: Grade depth below π(μ) (ignored for finite injections)
            method: "fan" or "star"
            fan_cutoff: Depth of the fan, defaulting to ``cutoff``

        Returns:
            BranchingResult grouped into classes ν − nδ
        """
        table = self.anomalous(mu, cutoff, method, fan_cutoff)
        result = extract_branching(table, self.sub)
        logger.debug(f"{self.injection.name}: {len(result.coefficients)} dominant coefficients")
        return result
