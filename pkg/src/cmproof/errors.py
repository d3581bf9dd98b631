"""Exception types shared by the kernel, the axiom catalog and the parser.

Every exception carries a ``code`` string; checkers turn caught exceptions
into diagnostics keyed by that code.
"""
from __future__ import annotations


class CMError(Exception):
    code = "Error"


class SortError(CMError):
    code = "SortError"


class CaptureError(CMError):
    code = "CaptureError"


class ProvisoViolation(CMError):
    code = "ProvisoViolation"


class ArityError(CMError):
    code = "ArityError"


class NotArithmetical(CMError):
    code = "NotArithmetical"


class UnknownDerivedRule(CMError):
    code = "UnknownDerivedRule"


class UnsupportedRule(CMError):
    code = "UnsupportedRule"


class UnknownWorld(CMError):
    code = "UnknownWorld"


class KernelError(CMError):
    """A rule application that the checker refuses; ``code`` is set per instance."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ParseError(CMError):
    code = "SyntaxError"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.message = message


class UnknownRule(ParseError):
    code = "UnknownRule"


class DanglingReference(ParseError):
    code = "DanglingReference"
