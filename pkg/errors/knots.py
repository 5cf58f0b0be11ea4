from typing import Optional

from abstractions.error import IError


class ExprSyntaxError(IError):
    """
    Raised by the expression parser; `position` is the 0-based offset
    into the input text.
    """

    def __init__(self, message: str, text: str, position: int) -> None:
        pointer = " " * position + "^"
        super().__init__(
            f"syntax error at position {position}: {message}\n"
            f"  {text}\n  {pointer}",
            details={"position": position},
        )
        self.position = position


class ExprValidationError(IError):
    """
    Raised when a well-formed expression carries invalid parameters
    (non-coprime cable, zero winding).
    """
    pass


class EvaluationError(IError):
    """
    Raised when an expression cannot be evaluated against a table.
    """
    pass


class TableError(IError):
    """
    Raised on malformed `.knots` table text.
    """

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}", details={"line": line})
        self.line = line
