from typing import Any, Dict, Optional

from abstractions.error import IError


class MoveError(IError):
    """
    Raised when a rewrite move's preconditions fail or its result would be
    an invalid complex.
    """

    def __init__(
        self,
        move: str,
        message: str,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(f"{move}: {message}", details=details)
        self.move = move
