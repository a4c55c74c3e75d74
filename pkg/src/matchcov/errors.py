"""Exception types shared across the package."""


class MatchcovError(Exception):
    """Base class for all matchcov errors."""


class GraphBuildError(MatchcovError):
    """Raised when a graph cannot be constructed from the given data."""


class Graph6Error(MatchcovError):
    """Raised on malformed graph6 input; carries the byte offset."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class CatalogError(MatchcovError, KeyError):
    """Raised when a catalog name is unknown."""


class CapacityError(MatchcovError):
    """Raised when an input exceeds the exact-computation size bounds."""


class PreconditionError(MatchcovError):
    """Raised when an operation's documented precondition is violated."""
