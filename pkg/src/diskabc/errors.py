"""Exception types shared across the package."""


class DiskAbcError(Exception):
    """Base class for all library-specific errors."""


class InputError(DiskAbcError):
    """Malformed problem description or serialized object."""


class DomainViolation(DiskAbcError):
    """A prescribed zero lies on or outside the domain boundary."""


class HypothesisFailure(DiskAbcError):
    """A hypothesis of one of the verified statements fails for the input.

    ``reason`` is a short machine-readable code, e.g. ``"not_coprime"``,
    ``"boundary_zero"``, ``"sum_mismatch"``, ``"linear_dependence"``.
    """

    def __init__(self, reason: str, message: str | None = None):
        super().__init__(message or reason)
        self.reason = reason


class LinearDependence(HypothesisFailure):
    """The Wronskian vanishes identically (dependent input functions)."""

    def __init__(self, message: str = "wronskian vanishes identically"):
        super().__init__("linear_dependence", message)


class NumericalFailure(DiskAbcError):
    """A numerical routine failed to reach its accuracy target.

    ``details`` carries diagnostic data such as residuals or the last
    two quadrature estimates.
    """

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = dict(details or {})
