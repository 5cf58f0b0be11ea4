from abc import ABC
from typing import Any, Dict, Optional


class IError(ABC, Exception):
    """
    Base class for every domain error raised by the services.

    Args:
        message (str): Human readable description.
        details (Optional[Dict[str, Any]]): Structured context for callers
        that want to report the failure without parsing the message.
    """

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        return self.message
