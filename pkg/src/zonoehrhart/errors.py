"""Exception types shared across the package.

The CLI maps these onto exit codes: mathematical preconditions exit 1,
enumeration/resource limits exit 2, internal cross-check failures exit 3.
"""


class LatticeMathError(ValueError):
    """A mathematical precondition was violated (rank, dependence, degree)."""


class NotFullDimensionalError(LatticeMathError):
    """The generators do not span the ambient space."""


class DependentSetError(LatticeMathError):
    """An operation requiring linear independence received a dependent set."""


class EnumerationLimitError(RuntimeError):
    """An enumeration would exceed the configured resource guard."""


class InternalDisagreementError(RuntimeError):
    """Two independent computation paths disagreed; indicates a bug."""
