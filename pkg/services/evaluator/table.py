from typing import Dict, Optional

from pydantic import ValidationError

from constants.formats import TableFormat
from dtos.knots import HandleValue, KnotRecord, KnotTable, PatternRecord
from errors.knots import TableError
from services.evaluator.abstraction import IEvaluatorService

from start_utils import logger


def parse_bound(value: str, line: int, field: str) -> Optional[int]:
    if value == TableFormat.INFINITY:
        return None
    try:
        return int(value)
    except ValueError:
        raise TableError(f"{field} '{value}' is not an integer", line) from None


def parse_fibered(value: str, line: int) -> bool:
    if value == TableFormat.FIBERED:
        return True
    if value == TableFormat.NON_FIBERED:
        return False
    raise TableError(
        f"expected '{TableFormat.FIBERED}' or '{TableFormat.NON_FIBERED}', "
        f"got '{value}'",
        line,
    )


class LoadTableService(IEvaluatorService):
    """
    Parse `.knots` text. Knot lines read `name|fibered|lower|upper|source`
    and pattern lines `name|fibered|lower|upper|winding|source`; the upper
    bound may be `inf`. Records before any section header are knots.
    Fibered entries must have handle number 0.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(self, text: str) -> KnotTable:
        knots: Dict[str, KnotRecord] = {}
        patterns: Dict[str, PatternRecord] = {}
        section = TableFormat.KNOTS_SECTION

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split(TableFormat.COMMENT, 1)[0].strip()
            if not line:
                continue
            if line in (TableFormat.KNOTS_SECTION, TableFormat.PATTERNS_SECTION):
                section = line
                continue
            fields = [f.strip() for f in line.split(TableFormat.SEPARATOR)]
            expected = (
                TableFormat.KNOT_FIELDS
                if section == TableFormat.KNOTS_SECTION
                else TableFormat.PATTERN_FIELDS
            )
            if len(fields) != expected:
                raise TableError(
                    f"expected {expected} fields, got {len(fields)}", number
                )
            name = fields[0]
            if name in knots or name in patterns:
                raise TableError(f"duplicate entry '{name}'", number)

            try:
                value = HandleValue(
                    lower=parse_bound(fields[2], number, "lower bound"),
                    upper=parse_bound(fields[3], number, "upper bound"),
                )
                if section == TableFormat.KNOTS_SECTION:
                    knots[name] = KnotRecord(
                        name=name,
                        fibered=parse_fibered(fields[1], number),
                        h=value,
                        source=fields[4],
                    )
                else:
                    patterns[name] = PatternRecord(
                        name=name,
                        fibered=parse_fibered(fields[1], number),
                        h=value,
                        winding=parse_bound(fields[4], number, "winding"),
                        source=fields[5],
                    )
            except ValidationError as error:
                message = error.errors()[0]["msg"].removeprefix("Value error, ")
                raise TableError(message, number) from None

        self.logger.debug(
            f"loaded {len(knots)} knots and {len(patterns)} patterns"
        )
        return KnotTable(knots=knots, patterns=patterns)
