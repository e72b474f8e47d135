"""
PyBranch - exact branching coefficients for finite and affine Lie algebras.

Modules of an algebra g are restricted to a reductive subalgebra a ⊂ g with
the fan-of-injection recursion; weight diagrams are the special case of the
Cartan subalgebra.

Basic usage:
    from pybranch import Brancher

    brancher = Brancher('preset:B1-in-A2')
    adjoint = brancher.ambient.from_fw([1, 1])
    result = brancher.branch(adjoint)

    for weight, multiplicity in result.coefficients.items():
        print(weight, multiplicity)
"""

__version__ = "0.1.0"
__author__ = "PyBranch Team"

# Main exports
from .brancher import Brancher
from .branching import (
    anomalous_coefficients,
    anomalous_coefficients_star,
    branching_functions,
    extract_branching,
    property_residuals,
    weight_multiplicities,
)

# Algebras and injections
from .algebras import (
    SHIPPED_ALGEBRAS,
    AlgebraKind,
    AlgebraSpec,
    build_algebra,
    expand_denominator,
    singular_weights,
)
from .injections import InjectionSpec, build_fan, compute_phi, load_injection

# Data models
from .models import (
    AnomalousTable,
    BranchingResult,
    Fan,
    FiniteModuleDiagram,
    SignedSeries,
    SingularElement,
    Weight,
    Window,
)
from .exceptions import (
    BranchingError,
    InjectionError,
    PyBranchError,
    SchemaError,
    UnsupportedAlgebraError,
    WeightError,
    WindowError,
)

__all__ = [
    # Main classes
    'Brancher',
    'anomalous_coefficients',
    'anomalous_coefficients_star',
    'branching_functions',
    'extract_branching',
    'property_residuals',
    'weight_multiplicities',

    # Algebras and injections
    'SHIPPED_ALGEBRAS',
    'AlgebraKind',
    'AlgebraSpec',
    'build_algebra',
    'expand_denominator',
    'singular_weights',
    'InjectionSpec',
    'build_fan',
    'compute_phi',
    'load_injection',

    # Data models
    'AnomalousTable',
    'BranchingResult',
    'Fan',
    'FiniteModuleDiagram',
    'SignedSeries',
    'SingularElement',
    'Weight',
    'Window',

    # Errors
    'BranchingError',
    'InjectionError',
    'PyBranchError',
    'SchemaError',
    'UnsupportedAlgebraError',
    'WeightError',
    'WindowError',

    # Metadata
    '__version__',
    '__author__',
]


def get_version():
    """Get the current version of pybranch."""
    return __version__


def get_supported_algebras():
    """Get the labels of the algebras covered by the shipped checks."""
    return [kind.label for kind in SHIPPED_ALGEBRAS]


def get_presets():
    """Get the names of the shipped injection presets."""
    from .injections import registry
    return registry.list_presets()
