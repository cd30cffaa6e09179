"""Exception hierarchy shared by every module of the package."""


class RevDragonError(Exception):
    """Base class for all errors raised by revdragon."""


class InvalidDenominator(RevDragonError, ValueError):
    pass


class AngleOutOfRange(RevDragonError, ValueError):
    pass


class BudgetExceeded(RevDragonError, ValueError):
    pass


class DegenerateParameter(RevDragonError, ValueError):
    pass


class MissingBeta(RevDragonError, ValueError):
    pass


class UnknownPreset(RevDragonError, KeyError):
    pass


class NoUniqueFixedPoint(RevDragonError, ValueError):
    pass


class EmptyCloud(RevDragonError, ValueError):
    pass


class InvalidSequence(RevDragonError, ValueError):
    pass


class NotFound(RevDragonError, LookupError):
    pass


class DegenerateViewport(RevDragonError, ValueError):
    pass


class ParseError(RevDragonError, ValueError):
    """Malformed textual input; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
