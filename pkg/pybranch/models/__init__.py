"""
Data models: lattice arithmetic and result records.
"""
from .lattice import (
    GramForm,
    HeightOrder,
    SignedSeries,
    Weight,
    format_fraction,
    inner,
    series_add,
    series_mul_truncated,
    to_fraction,
)
from .results import (
    AnomalousTable,
    BranchingResult,
    Fan,
    FiniteModuleDiagram,
    SingularElement,
    Window,
)

__all__ = [
    'GramForm',
    'HeightOrder',
    'SignedSeries',
    'Weight',
    'format_fraction',
    'inner',
    'series_add',
    'series_mul_truncated',
    'to_fraction',
    'AnomalousTable',
    'BranchingResult',
    'Fan',
    'FiniteModuleDiagram',
    'SingularElement',
    'Window',
]
