"""
Utility modules for pybranch.

This module contains helper functions and classes for:
- Exact rational linear algebra (linalg)
- Parsing algebra, weight and rational text (parsing)
- Rendering weights, fans and q-series (formatting)

Only linalg is re-exported here; parsing and formatting depend on the
algebra layer and are imported from their own modules.
"""

from .linalg import exact_inverse, exact_product, gram_matrix

__all__ = [
    'exact_inverse',
    'exact_product',
    'gram_matrix',
]
