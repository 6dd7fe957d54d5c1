"""Exception types raised by relrep."""


class RelrepError(Exception):
    """Base class for relrep errors."""


class IntegrityError(RelrepError):
    """A model, table, or decoded assignment violates a required constraint."""


class CeilingExceeded(RelrepError):
    """An exhaustive enumeration would exceed the configured ceiling."""

    def __init__(self, required: int, allowed: int):
        self.required = required
        self.allowed = allowed
        super().__init__(
            f"exhaustive scan needs {required} assignments, ceiling is {allowed}"
        )


class ParseError(RelrepError):
    """Malformed input file. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)
