"""Exception hierarchy shared by every package (common)."""

from typing import Optional


class CubeIdealError(Exception):
    """Base class for all errors raised by the laboratory."""


class DimensionError(CubeIdealError, ValueError):
    """A point, vector or inequality does not match the ambient dimension."""


class IndexSetError(CubeIdealError, IndexError):
    """An index set refers to coordinates outside [n]."""


class ArgumentError(CubeIdealError, ValueError):
    """An argument is malformed or exceeds a safety cap."""


class PreconditionError(CubeIdealError):
    """The operation's precondition does not hold for this input."""


class ConsistencyError(CubeIdealError, AssertionError):
    """Two independent computations disagree; indicates an implementation bug."""


class ParseError(CubeIdealError, ValueError):
    """Malformed input file, with a precise location."""

    def __init__(self, message: str, source: str = '<string>', line: Optional[int] = None,
                 column: Optional[int] = None):
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        super().__init__(self.location() + ': ' + message)

    def location(self) -> str:
        loc = self.source
        if self.line is not None:
            loc += f':{self.line}'
            if self.column is not None:
                loc += f':{self.column}'
        return loc
