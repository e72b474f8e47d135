"""
Text parsing for algebra descriptors, highest weights and rationals.
"""
from pathlib import Path
from typing import Any, List, Mapping, Union
import json
import re

from ..algebras import AlgebraKind, AlgebraSpec, build_algebra
from ..exceptions import SchemaError
from ..models.lattice import Weight, to_fraction


class InputPatterns:
    """Regex patterns for command-line inputs."""

    # A2, G2, A2^(1), a2^(2), D4
    ALGEBRA = re.compile(r'^\s*([A-Za-z])\s*(\d+)\s*(?:\^\s*\(?\s*(\d+)\s*\)?)?\s*$')

    # fw:1,0 or fw:1,0;-2 (trailing grade)
    FUNDAMENTAL = re.compile(r'^\s*fw\s*:\s*(.*?)\s*(?:;\s*([^;]+?)\s*)?$', re.IGNORECASE)

    # ortho:1,0,-1 or ortho:1,0,-1;2;0
    ORTHOGONAL = re.compile(r'^\s*ortho\s*:\s*([^;]*?)\s*(?:;\s*([^;]+?)\s*(?:;\s*([^;]+?)\s*)?)?$', re.IGNORECASE)

    RATIONAL = re.compile(r'^[+-]?\d+(?:/\d+)?$')


def parse_rationals(text: str) -> List[Any]:
    """
    Split a comma-separated list of rationals ("1, -1/2, 3").

    Raises:
        SchemaError: If an entry is not of the form p or p/q
    """
    items = [item.strip() for item in text.split(',')] if text.strip() else []
    for item in items:
        if not InputPatterns.RATIONAL.match(item):
            raise SchemaError(f"Invalid rational '{item}' in '{text}': expected p or p/q")
    return [to_fraction(item) for item in items]


def _load_json(text: str, what: str) -> Any:
    stripped = text.strip()
    if stripped.startswith(('{', '[')):
        source = stripped
    else:
        path = Path(stripped)
        if not path.is_file():
            return None
        try:
            source = path.read_text(encoding='utf-8')
        except OSError as e:
            raise SchemaError(f"Cannot read {what} file {path}: {e}") from e
    try:
        return json.loads(source)
    except json.JSONDecodeError as e:
        raise SchemaError(f"Invalid {what} JSON: {e}") from e


def parse_algebra(value: Union[str, Mapping[str, Any], AlgebraSpec]) -> AlgebraSpec:
    """
    Build an algebra from "A2", "G2", "A2^(1)", inline JSON or a JSON file.

    Raises:
        SchemaError: For unparseable text
        UnsupportedAlgebraError: For unknown series, ranks or twists
    """
    if isinstance(value, AlgebraSpec):
        return value
    if isinstance(value, Mapping):
        return build_algebra(value)
    text = str(value)
    match = InputPatterns.ALGEBRA.match(text)
    if match:
        series, rank, twist = match.groups()
        return build_algebra(AlgebraKind(series.upper(), int(rank), int(twist or 0)))
    document = _load_json(text, 'algebra')
    if not isinstance(document, Mapping):
        raise SchemaError(f"Cannot parse algebra '{text}': expected e.g. A2, G2, A2^(1) or JSON")
    return build_algebra(document)


def _weight_from_document(document: Mapping[str, Any], spec: AlgebraSpec) -> Weight:
    grade = document.get('grade', 0)
    if 'fw' in document:
        return spec.from_fw(list(document['fw']), grade)
    if 'ortho' in document:
        return Weight(tuple(document['ortho']), document.get('level', 0), grade)
    if 'finite' in document:
        return Weight.from_dict(document)
    raise SchemaError("Highest-weight JSON needs 'fw', 'ortho' or 'finite'")


def parse_highest_weight(value: Union[str, Mapping[str, Any], Weight], spec: AlgebraSpec) -> Weight:
    """
    Parse a weight given as fw:a,b[;grade], ortho:x,..[;level[;grade]] or JSON.

    Raises:
        SchemaError: For malformed input
        DimensionMismatchError: If the coordinate count does not fit ``spec``
    """
    if isinstance(value, Weight):
        weight = value
    elif isinstance(value, Mapping):
        weight = _weight_from_document(value, spec)
    else:
        text = str(value)
        fundamental = InputPatterns.FUNDAMENTAL.match(text)
        orthogonal = InputPatterns.ORTHOGONAL.match(text)
        if fundamental:
            coefficients, grade = fundamental.groups()
            grade = parse_rationals(grade)[0] if grade else 0
            weight = spec.from_fw(parse_rationals(coefficients), grade)
        elif orthogonal:
            coords, level, grade = orthogonal.groups()
            weight = Weight(
                tuple(parse_rationals(coords)),
                parse_rationals(level)[0] if level else 0,
                parse_rationals(grade)[0] if grade else 0,
            )
        else:
            document = _load_json(text, 'weight')
            if not isinstance(document, Mapping):
                raise SchemaError(
                    f"Cannot parse weight '{text}': expected fw:a,b,..., ortho:x,...;level;grade or JSON"
                )
            weight = _weight_from_document(document, spec)
    spec.check_weight(weight)
    return weight
