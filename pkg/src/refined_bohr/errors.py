"""Exception hierarchy shared by the package."""


class BohrError(Exception):
    """Base class for all package errors."""


class DomainError(BohrError, ValueError):
    """A parameter lies outside the domain where a construction or bound is defined."""


class ZeroLeadingCoefficient(BohrError, ZeroDivisionError):
    """Series reciprocal requested for a series with vanishing constant term."""


class NoRootInUnitInterval(BohrError):
    """A radius equation has no root in (0, 1)."""


class MultipleRoots(BohrError):
    """A radius equation claimed to have a unique root shows several sign changes."""


class NoWitnessFound(BohrError):
    """A sharpness scan produced no witness exceeding 1."""

    def __init__(self, message, scanned=None):
        super().__init__(message)
        self.scanned = scanned or []
