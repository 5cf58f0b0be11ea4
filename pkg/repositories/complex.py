from pathlib import Path
from typing import List, Union

from constants.formats import ComplexFormat
from dtos.splitting_complex import SplittingComplex
from abstractions.repository import IRepository
from services.complex.deserialize import DeserializeComplexService
from services.complex.serialize import SerializeComplexService

from start_utils import logger


class ComplexRepository(IRepository):
    """
    Repository of `.ghs` splitting complexes.
    """

    extension = ComplexFormat.EXTENSION

    def __init__(self, root=None) -> None:
        super().__init__(root)
        self.logger = logger
        self.serializer = SerializeComplexService()
        self.deserializer = DeserializeComplexService()

    def get(self, name: Union[str, Path]) -> SplittingComplex:
        """
        Load and parse one complex.
        Raises:
            ComplexParseError: on malformed text.
            OSError: when the file cannot be read.
        """
        self.logger.debug(f"loading complex {name}")
        return self.deserializer.run(self.read_text(name))

    def save(self, name: Union[str, Path], complex_: SplittingComplex) -> Path:
        return self.write_text(name, self.serializer.run(complex_))

    def list(self) -> List[Path]:
        if self.root is None or not self.root.is_dir():
            return []
        return sorted(self.root.rglob(f"*{self.extension}"))
