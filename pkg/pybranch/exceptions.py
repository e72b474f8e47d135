"""
Exception hierarchy for pybranch.

Every error carries the exit code the command-line front end reports for it.
Input-validation errors also derive from ValueError.
"""


class PyBranchError(Exception):
    """Base class for all pybranch errors."""

    exit_code = 1


class SchemaError(PyBranchError, ValueError):
    """Malformed configuration, JSON document or weight text."""

    exit_code = 2


class DimensionMismatchError(SchemaError):
    """A weight does not match the ambient dimension it is used with."""


class WeightError(SchemaError):
    """A highest weight or cutoff outside the domain of an operation."""


class UnsupportedAlgebraError(PyBranchError, ValueError):
    """Unknown series, rank or twist."""

    exit_code = 3


class InjectionError(UnsupportedAlgebraError):
    """An injection that cannot be handled by the fan recursion."""


class WindowError(PyBranchError):
    """A computation window that cannot produce complete results."""

    exit_code = 4


class TruncationError(WindowError):
    """A truncated product whose retained terms would be inexact."""


class BranchingError(PyBranchError):
    """The recursion produced a value that is not a valid multiplicity."""
