"""Exception hierarchy shared by all modules."""


class RicciError(Exception):
    """Base class for every error raised by the package."""


class ArgumentError(RicciError, ValueError):
    pass


class ConstructionError(RicciError, ValueError):
    """Invalid edge list (loop or duplicate edge)."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DisconnectedError(RicciError):
    pass


class ScaleError(RicciError):
    """Instance exceeds the sizes this toolkit verifies exhaustively."""


class DegreeZeroError(RicciError):
    pass


class MarginalMismatch(RicciError):
    pass


class PreconditionError(RicciError):
    """A hypothesis of the statement being checked does not hold."""

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class NotHypercubeError(RicciError):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class ParseError(RicciError, ValueError):
    def __init__(self, message, line=None, offset=None):
        super().__init__(message)
        self.line = line
        self.offset = offset


class InternalError(RicciError):
    """Solver reached a state that valid input cannot produce."""


class InconclusiveError(RicciError):
    """An interval comparison did not resolve within the precision budget."""
