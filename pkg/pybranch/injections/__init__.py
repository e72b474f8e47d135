"""
Injections a ⊂ g, their carriers and fans.
"""
from .fan import build_fan, compute_phi, projected_root_exponents
from .presets import PresetRegistry, get_preset, load_injection, registry
from .spec import InjectionSpec

__all__ = [
    'InjectionSpec',
    'PresetRegistry',
    'build_fan',
    'compute_phi',
    'get_preset',
    'load_injection',
    'projected_root_exponents',
    'registry',
]
