"""Exception hierarchy; each class maps to one CLI exit code."""


class CantorFrameError(Exception):
    exit_code = 1


class LiteralSyntaxError(CantorFrameError, ValueError):
    """Input text does not match any literal grammar."""

    exit_code = 1


class PreconditionError(CantorFrameError, ValueError):
    """Well-formed input that violates an operation's precondition."""

    exit_code = 2


class BudgetExhausted(CantorFrameError):
    exit_code = 3

    def __init__(self, message: str = "no subcover found within budget") -> None:
        super().__init__(message)


class LawViolation(CantorFrameError, AssertionError):
    """A property suite found a counterexample."""

    exit_code = 4
