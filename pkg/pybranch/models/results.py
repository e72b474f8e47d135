"""
Result records produced by the algebra, injection and branching modules.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple

from .lattice import HeightOrder, SignedSeries, Weight, format_fraction, to_fraction
from ..exceptions import SchemaError


@dataclass(frozen=True)
class SingularElement:
    """The signed singular-weight element Ψ^(μ) truncated at a grade cutoff."""
    series: SignedSeries
    highest_weight: Weight
    grade_cutoff: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            'highest_weight': self.highest_weight.to_dict(),
            'grade_cutoff': format_fraction(self.grade_cutoff),
            'terms': self.series.to_list(),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'SingularElement':
        try:
            highest = Weight.from_dict(data['highest_weight'])
            cutoff = to_fraction(data['grade_cutoff'])
            terms = data['terms']
        except (KeyError, TypeError) as e:
            raise SchemaError(f"Malformed singular element document: {e}") from e
        floor = highest.grade - cutoff
        return cls(SignedSeries.from_list(terms, floor=floor), highest, cutoff)


@dataclass(frozen=True)
class Fan:
    """
    Lowest carrier vector γ0 with its sign, and the shifted carrier Γ.

    ``entries`` holds (γ, s(γ+γ0)) in increasing height order.
    """
    gamma0: Weight
    s0: int
    entries: Tuple[Tuple[Weight, int], ...]
    cutoff: Fraction
    order: HeightOrder = HeightOrder()

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def vectors(self) -> List[Weight]:
        return [gamma for gamma, _ in self.entries]

    def carrier(self) -> SignedSeries:
        """Rebuild the signed carrier Φ from γ0 and the fan."""
        terms = {self.gamma0: self.s0}
        for gamma, sign in self.entries:
            terms[gamma + self.gamma0] = sign
        return SignedSeries(terms)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'gamma0': self.gamma0.to_dict(),
            's0': self.s0,
            'cutoff': format_fraction(self.cutoff),
            'entries': [
                {'gamma': gamma.to_dict(), 'sign': sign} for gamma, sign in self.entries
            ],
        }


@dataclass(frozen=True)
class Window:
    """Grade range on which an anomalous table is complete."""
    min_grade: Fraction
    top_grade: Fraction = Fraction(0)

    @property
    def depth(self) -> Fraction:
        return self.top_grade - self.min_grade

    def contains(self, weight: Weight) -> bool:
        return self.min_grade <= weight.grade <= self.top_grade


@dataclass(frozen=True)
class AnomalousTable:
    """Anomalous branching coefficients k_ξ on a complete window."""
    coefficients: Mapping[Weight, int]
    window: Window
    swept: int = 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def coefficient(self, weight: Weight) -> int:
        return self.coefficients.get(weight, 0)

    def as_series(self) -> SignedSeries:
        return SignedSeries(dict(self.coefficients), floor=self.window.min_grade)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'window': {
                'min_grade': format_fraction(self.window.min_grade),
                'top_grade': format_fraction(self.window.top_grade),
            },
            'coefficients': self.as_series().to_list(),
        }


@dataclass
class BranchingResult:
    """Branching coefficients b_ν^(μ) on the dominant chamber of the subalgebra."""
    coefficients: Dict[Weight, int]
    by_class: Dict[Weight, Dict[Fraction, int]] = field(default_factory=dict)
    sub_label: str = ''
    affine: bool = False
    fw_labels: Dict[Weight, Tuple[Fraction, ...]] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.coefficients.values())

    def coefficient(self, weight: Weight) -> int:
        return self.coefficients.get(weight, 0)

    def ordered_classes(self) -> List[Weight]:
        """Class labels by leading exponent, then by label."""
        return sorted(
            self.by_class,
            key=lambda label: (min(self.by_class[label]), tuple(-c for c in label.finite), -label.level),
        )

    def to_dict(self) -> Dict[str, Any]:
        classes = []
        for label in self.ordered_classes():
            series = sorted(self.by_class[label].items())
            highest = label.to_dict()
            if label in self.fw_labels:
                highest['fw'] = [format_fraction(c) for c in self.fw_labels[label]]
            classes.append({
                'highest_weight': highest,
                'series': [[_plain(n), b] for n, b in series],
            })
        return {'sub': self.sub_label, 'affine': self.affine, 'classes': classes}


@dataclass(frozen=True)
class FiniteModuleDiagram:
    """Weight diagram of a finite-dimensional irreducible module."""
    multiplicities: Mapping[Weight, int]
    highest_weight: Weight

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities.values())

    def multiplicity(self, weight: Weight) -> int:
        return self.multiplicities.get(weight, 0)


def _plain(value: Fraction) -> Any:
    return value.numerator if value.denominator == 1 else format_fraction(value)
