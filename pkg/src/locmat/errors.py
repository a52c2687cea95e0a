"""
Exception hierarchy for locmat.

Every error derives from a builtin (ValueError, ArithmeticError, ...) so code
that catches the builtin keeps working.
"""


class LocmatError(Exception):
    """Root of all locmat domain errors."""


class SteinitzSyntaxError(LocmatError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotDivisibleError(LocmatError, ValueError):
    pass


class FieldError(LocmatError, ValueError):
    pass


class MixedFieldsError(FieldError):
    pass


class FieldDivisionByZero(FieldError, ZeroDivisionError):
    pass


class LiteralSyntaxError(FieldError):
    pass


class NoTowerError(FieldError):
    pass


class NDoesNotDivideIndexError(FieldError):
    pass


class SingularMatrixError(LocmatError, ArithmeticError):
    pass


class DetNotOneError(LocmatError, ValueError):
    pass


class PeriodNotDividesIndexError(LocmatError, ValueError):
    pass


class IndexRangeError(LocmatError, IndexError):
    pass


class FileFormatError(LocmatError, ValueError):
    pass
