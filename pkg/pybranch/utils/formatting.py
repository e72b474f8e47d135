"""
Rendering of weights, fans, tables and branching functions.
"""
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple
import json

from ..algebras import AlgebraSpec
from ..models.lattice import SignedSeries, Weight, format_fraction
from ..models.results import BranchingResult, Fan, FiniteModuleDiagram


def _term(coefficient: Fraction, symbol: str, first: bool) -> str:
    sign = '-' if coefficient < 0 else ('' if first else '+')
    magnitude = abs(coefficient)
    body = symbol if magnitude == 1 else f"{format_fraction(magnitude)}{symbol}"
    if first:
        return f"{sign}{body}"
    return f" {sign} {body}"


def root_combination(spec: AlgebraSpec, weight: Weight) -> Optional[str]:
    """Render a level-0 weight as Σ c_i α_i + nδ, or None outside the root span."""
    if weight.level != 0 or not spec.classical_simple_roots:
        return None
    coords = spec.root_coordinates(weight)
    if coords is None:
        return None
    parts: List[Tuple[Fraction, str]] = [
        (c, f"α{i + 1}") for i, c in enumerate(coords) if c
    ]
    if weight.grade:
        parts.append((weight.grade, 'δ'))
    if not parts:
        return '0'
    return ''.join(_term(c, symbol, i == 0) for i, (c, symbol) in enumerate(parts))


def fw_text(spec: AlgebraSpec, weight: Weight) -> Optional[str]:
    if not spec.coroots:
        return None
    return '[' + ', '.join(format_fraction(c) for c in spec.fw_coordinates(weight)) + ']'


def format_weight(spec: AlgebraSpec, weight: Weight) -> str:
    """fw coordinates, orthogonal coordinates and, where possible, simple roots."""
    parts = []
    fw = fw_text(spec, weight)
    if fw is not None:
        parts.append(f"fw {fw}")
    parts.append(f"ortho {weight}")
    roots = root_combination(spec, weight)
    if roots is not None:
        parts.append(roots)
    return ' | '.join(parts)


def weight_dict(spec: AlgebraSpec, weight: Weight) -> Dict[str, Any]:
    data = weight.to_dict()
    if spec.coroots:
        data['fw'] = [format_fraction(c) for c in spec.fw_coordinates(weight)]
    roots = root_combination(spec, weight)
    if roots is not None:
        data['roots'] = roots
    return data


def format_qseries(terms: Iterable[Tuple[Fraction, int]]) -> str:
    """Render [(n, b), ...] as "1 + q^4 + 2q^6"."""
    pieces = []
    for exponent, coefficient in sorted(terms):
        if not coefficient:
            continue
        if exponent == 0:
            symbol = ''
        elif exponent == 1:
            symbol = 'q'
        else:
            symbol = f"q^{format_fraction(Fraction(exponent))}"
        first = not pieces
        if not symbol:
            value = Fraction(coefficient)
            sign = '-' if value < 0 else ('' if first else '+')
            text = format_fraction(abs(value))
            pieces.append(f"{sign}{text}" if first else f" {sign} {text}")
        else:
            pieces.append(_term(Fraction(coefficient), symbol, first))
    return ''.join(pieces) or '0'


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def render_fan(fan: Fan, spec: AlgebraSpec) -> str:
    lines = [
        f"γ0 = {format_weight(spec, fan.gamma0)}",
        f"s(γ0) = {fan.s0:+d}",
        f"fan cutoff = {format_fraction(fan.cutoff)}",
        f"Γ ({len(fan)} vectors):",
    ]
    for gamma, sign in fan.entries:
        lines.append(f"  {sign:+d}  {format_weight(spec, gamma)}")
    return '\n'.join(lines)


def fan_dict(fan: Fan, spec: AlgebraSpec) -> Dict[str, Any]:
    data = fan.to_dict()
    data['gamma0'] = weight_dict(spec, fan.gamma0)
    data['entries'] = [
        {'gamma': weight_dict(spec, gamma), 'sign': sign} for gamma, sign in fan.entries
    ]
    return data


def render_series(series: SignedSeries, spec: AlgebraSpec) -> str:
    lines = []
    for weight, coefficient in series.sorted_items():
        lines.append(f"{coefficient:+d}  {format_weight(spec, weight)}")
    return '\n'.join(lines)


def render_branching(result: BranchingResult, spec: AlgebraSpec) -> str:
    lines = [f"Branching to {result.sub_label}:"]
    for label in result.ordered_classes():
        series = sorted(result.by_class[label].items())
        if result.affine:
            lines.append(f"  {format_weight(spec, label)}:  {format_qseries(series)}")
        else:
            lines.append(f"  {series[0][1]} x {format_weight(spec, label)}")
    return '\n'.join(lines)


def render_qseries(result: BranchingResult, spec: AlgebraSpec) -> str:
    lines = []
    for label in result.ordered_classes():
        lines.append(f"b[{fw_text(spec, label) or label}] = {format_qseries(result.by_class[label].items())}")
    return '\n'.join(lines)


def render_diagram(diagram: FiniteModuleDiagram, spec: AlgebraSpec) -> str:
    lines = [f"dim = {diagram.dimension}"]
    ordered = sorted(diagram.multiplicities.items(), key=lambda item: item[0].sort_key(), reverse=True)
    for weight, mult in ordered:
        lines.append(f"  m = {mult}  {format_weight(spec, weight)}")
    return '\n'.join(lines)


def diagram_dict(diagram: FiniteModuleDiagram, spec: AlgebraSpec) -> Dict[str, Any]:
    ordered = sorted(diagram.multiplicities.items(), key=lambda item: item[0].sort_key(), reverse=True)
    return {
        'highest_weight': weight_dict(spec, diagram.highest_weight),
        'dimension': diagram.dimension,
        'weights': [
            {'weight': weight_dict(spec, w), 'multiplicity': m} for w, m in ordered
        ],
    }


def series_rows(series: SignedSeries, spec: AlgebraSpec) -> List[Dict[str, Any]]:
    return [
        {'weight': weight_dict(spec, w), 'coefficient': c} for w, c in series.sorted_items()
    ]
