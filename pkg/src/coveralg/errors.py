"""Exception types raised across the package."""


class CoverAlgError(Exception):
    """Base class for all package errors."""


class CycleError(CoverAlgError, ValueError):
    """The given relations contain a directed cycle."""


class NotNaturallyLabeledError(CoverAlgError, ValueError):
    """An operation needing a natural labeling got a poset without one."""


class SizeLimitError(CoverAlgError):
    """An enumeration would exceed its configured size cap."""


class NotAnIdealError(CoverAlgError, ValueError):
    pass


class NotMinimalError(CoverAlgError, ValueError):
    pass


class DomainError(CoverAlgError, ValueError):
    """An argument lies outside the domain of a map."""


class InconsistentInputError(CoverAlgError, ValueError):
    """Hilbert function values do not come from a series of the assumed shape."""
