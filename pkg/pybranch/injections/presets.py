"""
Named injections shipped with the package, and loading of injection references.
"""
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union
import json
import logging

from .spec import InjectionSpec
from ..exceptions import InjectionError, SchemaError

logger = logging.getLogger(__name__)

PRESET_FILE = Path(__file__).resolve().parent.parent / 'data' / 'injections.json'
PRESET_PREFIX = 'preset:'


class PresetRegistry:
    """Registry for named injection documents, built lazily on first use."""

    def __init__(self):
        self._documents: Dict[str, Mapping[str, Any]] = {}
        self._built: Dict[str, InjectionSpec] = {}

    def register(self, name: str, document: Mapping[str, Any]):
        """Register an injection JSON document under ``name``."""
        self._documents[name] = dict(document, name=name)
        self._built.pop(name, None)

    def get(self, name: str) -> InjectionSpec:
        """
        Get a preset by name.

        Raises:
            InjectionError: If no preset of that name is registered
        """
        if name not in self._documents:
            raise InjectionError(
                f"Unknown injection preset '{name}'. Available: {', '.join(self.list_presets())}"
            )
        if name not in self._built:
            self._built[name] = InjectionSpec.from_dict(self._documents[name])
            logger.debug(f"Built injection preset {name}")
        return self._built[name]

    def list_presets(self) -> List[str]:
        """List all registered presets."""
        return list(self._documents.keys())

    def load_file(self, path: Union[str, Path]):
        """Register every document of a JSON file mapping names to injections."""
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                documents = json.load(handle)
        except (OSError, json.JSONDecodeError) as e:
            raise SchemaError(f"Cannot read injection presets from {path}: {e}") from e
        if not isinstance(documents, dict):
            raise SchemaError(f"Preset file {path} must map names to injection documents")
        for name, document in documents.items():
            self.register(name, document)


def _default_registry() -> PresetRegistry:
    presets = PresetRegistry()
    presets.load_file(PRESET_FILE)
    return presets


# Global registry instance
registry = _default_registry()


def get_preset(name: str) -> InjectionSpec:
    return registry.get(name)


def load_injection(ref: Union[str, Path, Mapping[str, Any], InjectionSpec]) -> InjectionSpec:
    """
    Resolve an injection reference.

    Args:
        ref: "preset:NAME", a bare preset name, a path to injection JSON,
             a parsed injection document or an InjectionSpec

    Returns:
        The validated InjectionSpec

    Raises:
        SchemaError: For unreadable or malformed documents
        InjectionError: For unknown presets or invalid injections
    """
    if isinstance(ref, InjectionSpec):
        return ref
    if isinstance(ref, Mapping):
        return InjectionSpec.from_dict(ref)

    text = str(ref).strip()
    if text.startswith(PRESET_PREFIX):
        return registry.get(text[len(PRESET_PREFIX):])
    if text in registry.list_presets():
        return registry.get(text)

    path = Path(text)
    if not path.exists():
        raise InjectionError(f"Injection reference '{text}' is neither a preset nor a file")
    try:
        document = json.loads(path.read_text(encoding='utf-8'))
    except (OSError, json.JSONDecodeError) as e:
        raise SchemaError(f"Cannot read injection JSON {path}: {e}") from e
    if not isinstance(document, Mapping):
        raise SchemaError(f"Injection JSON {path} must be an object")
    return InjectionSpec.from_dict(document)
