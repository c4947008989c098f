"""Exception hierarchy shared by every stage of the pipeline."""


class ReqmineError(Exception):
    """Base class for input and validation failures (CLI exit code 1)."""


class SurveyFormatError(ReqmineError):
    """A survey file violates the CSV contract.

    ``line`` is 1-based; ``column`` is 1-based when the problem is a single
    cell, otherwise ``None``.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)


class EmptyInput(SurveyFormatError):
    pass


class RaggedRow(SurveyFormatError):
    pass


class NonBinaryValue(SurveyFormatError):
    pass


class DuplicateHeader(SurveyFormatError):
    pass


class ItemOutOfRange(ReqmineError, IndexError):
    pass


class MixedSizes(ReqmineError, ValueError):
    pass


class UnknownRequirement(ReqmineError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class LengthMismatch(ReqmineError, ValueError):
    pass


class DegenerateVariance(ReqmineError, ZeroDivisionError):
    """Pearson's coefficient is undefined because a column is constant."""

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class StageError(ReqmineError):
    """Wraps a failure with the name of the pipeline stage that raised it."""

    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        super().__init__(f"[{stage}] {cause}")
