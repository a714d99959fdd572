"""Exception hierarchy shared by the mapoly modules."""


class MapolyError(Exception):
    """Base class for all errors raised by mapoly."""


class MapError(MapolyError, ValueError):
    """Invalid rotation system or invalid edge reference."""


class MapFormatError(MapError):
    """Malformed map text; carries the offending line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class GroupError(MapolyError, ValueError):
    """Invalid group table, dimension multiset or group selector."""


class LimitExceededError(MapolyError, RuntimeError):
    """A configured size limit would be exceeded.

    ``limit`` names the limit (``"expansion cap"`` or ``"budget"``) so that
    callers such as the CLI can report it.
    """

    def __init__(self, message, limit, value, bound):
        self.limit = limit
        self.value = value
        self.bound = bound
        super().__init__(message)


class InternalError(MapolyError, AssertionError):
    """Two independent computations disagreed, or a derived quantity is impossible."""
