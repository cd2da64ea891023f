"""Exception hierarchy shared by every module."""


class ZetaError(Exception):
    """Base class for all errors raised by dynzeta."""


class DomainError(ZetaError, ValueError):
    """An argument lies outside the domain of the operation (e.g. a non-monic series)."""


class PrecisionError(DomainError):
    """The source series is not known to enough terms for the requested result."""


class SizeLimitError(ZetaError, ValueError):
    """An enumeration or order exceeds its configured cap."""


class NonAdmissibleError(ZetaError, ValueError):
    """A linear map has a spectrum that makes it non-admissible at some order.

    ``order`` is the first iterate at which admissibility fails (1 for an
    eigenvalue equal to 1, d for a primitive d-th root of unity), when known.
    """

    def __init__(self, message, order=None):
        super().__init__(message)
        self.order = order


class ConsistencyError(ZetaError, RuntimeError):
    """Two independent computations of the same quantity disagree.

    This never signals bad input; it means an implementation bug.
    """
