"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every error this package raises on bad input."""


class DomainViolation(ToolkitError):
    """A word, morphism or substitution was applied outside its domain."""


class ValidationError(ToolkitError):
    """A machine or instance fails one of its structural well-formedness checks."""


class ParseError(ToolkitError):
    """A text file does not match the expected grammar.

    Carries the 1-based line and column of the offending token when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where = f" ({where})"
        super().__init__(f"{message}{where}")


class InternalSoundnessError(ToolkitError):
    """An engine produced a witness that does not replay.

    This is never caused by user input; it indicates a bug in the engine or
    in one of the reductions, and is raised instead of reporting a bogus
    counterexample.
    """
