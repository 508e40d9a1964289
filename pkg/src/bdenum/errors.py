class EnumerationError(Exception):
    """Base class for every error raised by this package."""


class NoFixpoint(EnumerationError):
    """The successor ran past the hard step cap without repeating its input."""


class NonSolutionEmitted(EnumerationError):
    """A checker rejected a word produced by an enumerator."""


class BudgetExceeded(EnumerationError):
    """Auxiliary memory exceeded the declared budget."""


class InvalidPredecessor(EnumerationError):
    """A successor was called on a word that is not a valid previous output."""


class RankOutOfRange(EnumerationError, ValueError):
    pass


class MalformedClause(EnumerationError, ValueError):
    pass


class InstanceTooSmall(EnumerationError, ValueError):
    pass


class TooLargeForOracle(EnumerationError):
    pass


class ParseError(EnumerationError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
