"""
Run configuration for the command-line front end.
"""
from dataclasses import dataclass, field, fields
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Union
import json

from .exceptions import SchemaError
from .models.lattice import format_fraction, to_fraction

DEFAULT_MAX_CUTOFF = 50


class Command(Enum):
    """Commands exposed by the CLI."""
    FAN = "fan"
    BRANCH = "branch"
    WEIGHTS = "weights"
    SINGULAR = "singular"
    DENOMINATOR_CHECK = "denominator-check"


class OutputFormat(Enum):
    """Renderings of command results."""
    TEXT = "text"
    JSON = "json"
    QSERIES = "qseries"


# Fields each command cannot run without.
REQUIRED_FIELDS = {
    Command.FAN: ('injection',),
    Command.BRANCH: ('injection', 'highest_weight'),
    Command.WEIGHTS: ('algebra', 'highest_weight'),
    Command.SINGULAR: ('algebra', 'highest_weight'),
    Command.DENOMINATOR_CHECK: ('algebra',),
}


@dataclass
class RunConfig:
    """Configuration of a single CLI run."""
    command: Command
    algebra: Optional[Any] = None
    injection: Optional[Any] = None
    highest_weight: Optional[Any] = None
    cutoff: Fraction = Fraction(0)
    fan_cutoff: Optional[Fraction] = None
    method: str = 'fan'
    output_format: OutputFormat = OutputFormat.TEXT
    output_path: Optional[str] = None
    max_cutoff: int = DEFAULT_MAX_CUTOFF
    verbose: bool = False
    extra_params: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> 'RunConfig':
        """
        Create RunConfig from dictionary.

        Raises:
            SchemaError: For unknown commands or formats, or inexact cutoffs
        """
        try:
            command = config_dict.get('command')
            if isinstance(command, str):
                command = Command(command)
            output_format = config_dict.get('format', config_dict.get('output_format', 'text'))
            if isinstance(output_format, str):
                output_format = OutputFormat(output_format)
        except ValueError as e:
            raise SchemaError(f"Invalid run configuration: {e}") from e
        if not isinstance(command, Command):
            raise SchemaError("Run configuration needs a 'command'")

        fan_cutoff = config_dict.get('fan_cutoff')
        known = {f.name for f in fields(cls)} | {'format', 'out', 'hw'}
        return cls(
            command=command,
            algebra=config_dict.get('algebra'),
            injection=config_dict.get('injection'),
            highest_weight=config_dict.get('highest_weight', config_dict.get('hw')),
            cutoff=to_fraction(config_dict.get('cutoff', 0)),
            fan_cutoff=None if fan_cutoff is None else to_fraction(fan_cutoff),
            method=config_dict.get('method', 'fan'),
            output_format=output_format,
            output_path=config_dict.get('output_path', config_dict.get('out')),
            max_cutoff=config_dict.get('max_cutoff', DEFAULT_MAX_CUTOFF),
            verbose=bool(config_dict.get('verbose', False)),
            extra_params={k: v for k, v in config_dict.items() if k not in known},
        )

    @classmethod
    def from_file(cls, path: Union[str, Path], overrides: Optional[Dict[str, Any]] = None) -> 'RunConfig':
        """
        Read a JSON config file; non-None ``overrides`` take precedence.

        Raises:
            SchemaError: If the file cannot be read or parsed
        """
        try:
            data = json.loads(Path(path).read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as e:
            raise SchemaError(f"Cannot read config file {path}: {e}") from e
        if not isinstance(data, dict):
            raise SchemaError(f"Config file {path} must hold a JSON object")
        for key, value in (overrides or {}).items():
            if value is not None:
                data[key] = value
        return cls.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command.value,
            'algebra': self.algebra,
            'injection': self.injection,
            'highest_weight': self.highest_weight,
            'cutoff': format_fraction(self.cutoff),
            'fan_cutoff': None if self.fan_cutoff is None else format_fraction(self.fan_cutoff),
            'method': self.method,
            'format': self.output_format.value,
            'output_path': self.output_path,
            'max_cutoff': self.max_cutoff,
            'verbose': self.verbose,
        }

    def validate(self) -> None:
        """
        Check that the configuration can run.

        Raises:
            SchemaError: For missing fields, out-of-range cutoffs or an unknown method
        """
        for name in REQUIRED_FIELDS[self.command]:
            if getattr(self, name) in (None, ''):
                raise SchemaError(f"Command '{self.command.value}' needs --{_flag(name)}")
        if isinstance(self.max_cutoff, bool) or not isinstance(self.max_cutoff, int) or self.max_cutoff < 0:
            raise SchemaError(f"max_cutoff must be a nonnegative integer, got {self.max_cutoff!r}")
        for name in ('cutoff', 'fan_cutoff'):
            value = getattr(self, name)
            if value is None:
                continue
            if value < 0:
                raise SchemaError(f"{name} must be nonnegative, got {value}")
            if value > self.max_cutoff:
                raise SchemaError(f"{name} {value} exceeds max_cutoff {self.max_cutoff}")
        if self.method not in ('fan', 'star'):
            raise SchemaError(f"Unknown method '{self.method}'. Supported: fan, star")


def _flag(name: str) -> str:
    return {'highest_weight': 'hw'}.get(name, name.replace('_', '-'))
