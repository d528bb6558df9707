"""Exception types raised by the starconf library."""

from __future__ import annotations


class StarconfError(Exception):
    """Base class for all library errors."""


class ParameterError(StarconfError, ValueError):
    """Parameters violate an operation's preconditions."""


class DimensionError(StarconfError, ValueError):
    """Subspaces or matrices have incompatible ambient dimensions."""


class ContextMismatchError(StarconfError, ValueError):
    """Objects from different polynomial rings were combined."""


class NotArtinianError(StarconfError):
    """The quotient ring has no vanishing graded piece within the degree bound."""


class HypothesisViolation(StarconfError):
    """A theorem's hypothesis does not hold for the given input."""


class UndeterminedError(StarconfError, LookupError):
    """The value cannot be decided from the computed range; extend t_max."""
