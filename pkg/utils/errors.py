"""
Exception types shared by the arc-partition tools.

Library code raises these; only the command line tool (arc_partitions.py)
turns them into messages and exit codes.
"""


class ArcPartitionsError(Exception):
    """Base class for every error raised by the toolkit."""


class ParameterError(ArcPartitionsError, ValueError):
    """A parameter is outside the range an operation accepts (r < 2, i > r, ...)."""


class SeriesOrderError(ArcPartitionsError, ValueError):
    """Two truncated series with different truncation orders were combined."""


class NonUnitError(ArcPartitionsError, ArithmeticError):
    """A series whose constant term is not a unit was inverted."""


class CountMismatchError(ArcPartitionsError, ArithmeticError):
    """Two independent counts of the same family disagree."""

    def __init__(self, message: str, enumerated: int, from_series: int):
        super().__init__(message)
        self.enumerated = enumerated
        self.from_series = from_series


class UnknownIdentityError(ArcPartitionsError, LookupError):
    """The requested identity is not part of the verification catalogue."""


class WeightCapError(ArcPartitionsError):
    """An arc-lab run was requested beyond the weight cap without forcing it."""


def require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)
