"""Exception hierarchy for radohorn.

Every error raised by the library derives from :class:`RadoHornError`. Errors
that describe a bad argument also derive from :class:`ValueError` so callers
can catch either.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from radohorn.family_partition import ValidationReport


class RadoHornError(Exception):
    """Base class for all radohorn errors."""


class DimensionMismatchError(RadoHornError, ValueError):
    """Vectors of different dimensions were mixed in one computation."""

    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"dimension mismatch: expected {expected}, got {actual}")


class ArgumentError(RadoHornError, ValueError):
    """An argument is outside the range the operation accepts."""


class NotInSpanError(RadoHornError, ValueError):
    """A vector that must lie in a span does not."""


class DependentSetError(RadoHornError, ValueError):
    """A linearly independent set was required but a dependent one was given."""


class ExchangeError(RadoHornError, ValueError):
    """An exchange move violates its preconditions."""


class PartitionError(RadoHornError, ValueError):
    """A partition is malformed for the requested operation."""

    def __init__(self, message: str, report: ValidationReport | None = None) -> None:
        self.report = report
        super().__init__(message)


class TransversalError(RadoHornError):
    """No valid chain or transversal could be produced."""


class DegenerateFamilyError(RadoHornError):
    """The family contains zero vectors, which belong to no independent set."""

    def __init__(self, zero_indices: Iterable[int]) -> None:
        self.zero_indices = tuple(sorted(zero_indices))
        listed = ", ".join(str(i) for i in self.zero_indices)
        super().__init__(f"family contains zero vectors at indices: {listed}")


class NoWitnessError(RadoHornError):
    """A redundancy witness was requested for a partitionable family."""


class BudgetExceededError(RadoHornError):
    """A brute-force oracle was asked to enumerate beyond its budget."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds oracle budget of {limit}")


class ConfigurationError(RadoHornError):
    """Settings are invalid or could not be parsed."""


class FamilyFormatError(RadoHornError, ValueError):
    """A family document could not be read or failed schema validation."""


class ConstructionError(RadoHornError):
    """The staged construction reached a state its invariants rule out."""
