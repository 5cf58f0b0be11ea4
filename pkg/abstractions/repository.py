from abc import ABC
from pathlib import Path
from typing import Optional, Union

from start_utils import resolve_path


class IRepository(ABC):
    """
    File-backed repository of one line-oriented text format. Relative
    names are resolved against `root`, which itself is resolved against
    the project root.
    """

    extension: str = ""

    def __init__(self, root: Optional[Union[str, Path]] = None) -> None:
        self.root = resolve_path(str(root)) if root is not None else None

    def path_of(self, name: Union[str, Path]) -> Path:
        path = Path(name)
        if path.is_absolute() or self.root is None:
            return resolve_path(str(path))
        if not path.suffix and self.extension:
            path = path.with_suffix(self.extension)
        return self.root / path

    def read_text(self, name: Union[str, Path]) -> str:
        path = self.path_of(name)
        with open(path, "r", encoding="utf-8") as file:
            return file.read()

    def write_text(self, name: Union[str, Path], text: str) -> Path:
        path = self.path_of(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as file:
            file.write(text)
        return path
