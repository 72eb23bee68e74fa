"""Exceptions raised by simhaus operations."""


class SimhausError(Exception):
    """Base class for all simhaus errors."""


class EmptyInputError(SimhausError):
    """A face set or a face was empty where a nonempty one is required."""


class EmptyIntersectionError(SimhausError):
    """Two complexes share no face; the empty complex is unrepresentable."""


class NotInjectiveError(SimhausError):
    """A vertex relabeling map collapses two vertices."""


class UndefinedVertexError(SimhausError):
    """A vertex relabeling map is missing a vertex of the complex."""


class TooLargeError(SimhausError):
    """Input exceeds the configured brute-force bound."""


class InvalidLawError(SimhausError):
    """Probability weights are negative or do not sum to one exactly."""


class ParseError(SimhausError):
    """Malformed complex input; carries a position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{message} ({where})"
        super().__init__(message)
