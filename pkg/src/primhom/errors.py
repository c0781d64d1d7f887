class PrimhomError(Exception):
    """Base class for toolkit errors."""


class InputError(PrimhomError):
    """Bad user input; the CLI maps these to exit status 1."""


class ClosureExceedsCap(InputError):
    pass


class NotAPGroup(InputError):
    pass


class TrivialGroup(InputError):
    pass


class TableOverflow(InputError):
    pass


class InvalidWord(InputError):
    pass


class UnboundGenerator(InputError):
    pass


class MalformedTable(InputError):
    pass


class NotGenerating(InputError):
    pass


class WrongPetalCount(InputError):
    pass


class GrammarError(InputError):
    """Syntax error in a group or table file, with 1-based line/column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        loc = f"line {line}, column {column}: " if line else ""
        super().__init__(loc + message)


class SemanticError(InputError):
    pass


class InconsistencyDetected(PrimhomError):
    """Two independent computations disagree; the CLI exits with status 2."""

    def __init__(self, message: str, row: int = None, cls: int = None):
        self.row = row
        self.cls = cls
        super().__init__(message)


class GaschutzViolation(InconsistencyDetected):
    pass
