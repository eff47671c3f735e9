"""Exception hierarchy shared by every module of the package."""


class GradedPIError(Exception):
    """Base class for all library errors."""


class SpecMismatch(GradedPIError):
    pass


class DivisionByZero(GradedPIError, ZeroDivisionError):
    pass


class NoEmbedding(GradedPIError):
    pass


class ParseError(GradedPIError):
    """Raised on malformed textual input.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class GroupMismatch(GradedPIError):
    pass


class EmptySignature(GradedPIError):
    pass


class GradingViolation(GradedPIError):
    def __init__(self, i, j, degree, message=None):
        self.i, self.j, self.degree = i, j, degree
        super().__init__(message or f"product b{i}*b{j} has a component of degree {degree}")


class AlgebraMismatch(GradedPIError):
    pass


class FieldMismatch(GradedPIError):
    pass


class NotACocycle(GradedPIError):
    def __init__(self, g, h, k):
        self.triple = (g, h, k)
        super().__init__(f"2-cocycle identity fails on {(g, h, k)}")


class NotHomogeneous(GradedPIError):
    pass


class NoUnit(GradedPIError):
    pass


class NotGradedSimple(GradedPIError):
    def __init__(self, message, index=None, verdict=None):
        self.index = index
        self.verdict = verdict
        super().__init__(message)


class CapExceeded(GradedPIError):
    pass


class ModeMismatch(GradedPIError):
    pass


class ShapeMismatch(GradedPIError):
    pass


class ConfigurationError(GradedPIError):
    pass


class Undecided(GradedPIError):
    """A structural question could not be settled with the available tools."""
