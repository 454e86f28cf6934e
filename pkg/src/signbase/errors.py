"""Exception types shared across the package."""


class SignBaseError(Exception):
    """Base class for all signbase errors."""


class OrderMismatchError(SignBaseError):
    """Two matrices of different orders were combined."""


class CapacityError(SignBaseError):
    """An input or intermediate result exceeds the supported desk scale."""


class StructuralError(SignBaseError):
    """The input lacks a structural property the operation requires."""


class PolicyError(SignBaseError):
    """A sign policy cannot be realized on the requested family."""


class ConsistencyError(SignBaseError):
    """An internal cross-check failed; this indicates a bug, not bad input."""


class ParseError(SignBaseError):
    """Malformed ``.sdg`` input."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)
