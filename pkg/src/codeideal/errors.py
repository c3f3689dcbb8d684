"""Exception hierarchy.

Everything raised on purpose by the library derives from ``CodeIdealError``.
Errors about mathematical preconditions (bad field, rank deficiency, wrong
order, ...) derive from ``MathDomainError``; the CLI maps those to exit code 3
and ``ParseError`` to exit code 2.
"""


class CodeIdealError(Exception):
    pass


class MathDomainError(CodeIdealError):
    pass


class FieldError(MathDomainError):
    pass


class NotPrime(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class DivisionByZero(MathDomainError, ZeroDivisionError):
    pass


class RankDeficient(MathDomainError):
    pass


class TooLarge(MathDomainError):
    pass


class LengthMismatch(MathDomainError):
    pass


class NotDivisible(MathDomainError):
    pass


class WrongOrder(MathDomainError):
    pass


class NotZeroDimensional(MathDomainError):
    pass


class CapExceeded(MathDomainError):
    pass


class NotPrimeField(MathDomainError):
    pass


class NotStandardForm(MathDomainError):
    pass


class DegenerateCode(MathDomainError):
    pass


class ParseError(CodeIdealError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
