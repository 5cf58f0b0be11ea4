from abc import ABC, abstractmethod
from typing import Any


class IService(ABC):
    """
    One operation of the toolkit exposed through `run`. Services hold
    collaborators injected at construction and no other state.
    """

    @abstractmethod
    def run(self, *args: Any, **kwargs: Any) -> Any:
        pass
