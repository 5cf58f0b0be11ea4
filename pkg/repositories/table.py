from pathlib import Path
from typing import Union

from abstractions.repository import IRepository
from constants.formats import TableFormat
from dtos.knots import KnotTable
from services.evaluator.table import LoadTableService

from start_utils import logger


class TableRepository(IRepository):
    """
    Repository of `.knots` base-knot tables.
    """

    extension = TableFormat.EXTENSION

    def __init__(self, root=None) -> None:
        super().__init__(root)
        self.logger = logger
        self.loader = LoadTableService()

    def get(self, name: Union[str, Path]) -> KnotTable:
        self.logger.debug(f"loading table {name}")
        return self.loader.run(self.read_text(name))
