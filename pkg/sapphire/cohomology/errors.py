"""Exception types raised by the cohomology engine

All domain errors derive from :class:`CohomologyError` and from the built-in
exception that describes their nature, so callers may catch either.
"""
import re


class CohomologyError(Exception):
    """Common base of all domain errors"""

    @property
    def reason(self) -> str:
        """Short kebab-case code naming the violated condition"""
        return re.sub(r"(?<!^)(?=[A-Z])", "-", type(self).__name__).lower()


class RejectedParams(CohomologyError, ValueError):
    """Gluing parameters outside the supported regime

    Args:
        reason: One of :attr:`reasons`
        message: Human readable diagnostic
    """
    reasons = ("zero-parameter", "unimodularity-violation", "unnormalized-signs")

    def __init__(self, reason: str, message: str) -> None:
        if reason not in self.reasons:
            raise ValueError(f"Unknown rejection reason '{reason}'")
        super().__init__(message)
        self._reason = reason

    @property
    def reason(self) -> str:
        return self._reason


class AugmentationNonzero(CohomologyError, ValueError):
    pass


class DegreeOutOfRange(CohomologyError, IndexError):
    pass


class InvalidCharacter(CohomologyError, ValueError):
    pass


class InvalidModule(CohomologyError, ValueError):
    pass


class CoefficientSyntaxError(CohomologyError, ValueError):
    pass


class NotACocycle(CohomologyError, ValueError):
    pass


class NotInSpan(CohomologyError, ValueError):
    pass


class DimensionMismatch(CohomologyError, ValueError):
    pass
