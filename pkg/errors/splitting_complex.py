from typing import Optional

from abstractions.error import IError


class ComplexParseError(IError):
    """
    Raised on malformed `.ghs` text.

    Args:
        message (str): What went wrong.
        line (Optional[int]): 1-based line number of the offending line.
        field (Optional[str]): Name of the offending field.
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        field: Optional[str] = None,
    ) -> None:
        location = ""
        if line is not None:
            location = f"line {line}"
            if field:
                location += f", field '{field}'"
            location += ": "
        super().__init__(
            f"{location}{message}",
            details={"line": line, "field": field},
        )
        self.line = line
        self.field = field
