import json
from pathlib import Path
from typing import List, Union

from abstractions.repository import IRepository
from constants.formats import TraceFormat
from dtos.moves import MoveRecord
from dtos.scenario import TraceStep
from errors.scenario import ScenarioError

from start_utils import logger


def parse_trace(text: str) -> List[TraceStep]:
    """
    Parse `.trace` text. Move lines are either `<kind>|<json>` or a full
    move record `<kind>|<json>|h_before|h_after|j_before|j_after`.
    """
    steps: List[TraceStep] = []
    sep = TraceFormat.SEPARATOR
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(TraceFormat.COMMENT):
            continue
        kind, _, rest = line.partition(sep)
        if kind == TraceFormat.START:
            steps.append(TraceStep(
                kind=kind, arguments={"file": rest}, line=number
            ))
        elif kind in (TraceFormat.ASSUME, TraceFormat.PIECE):
            steps.append(TraceStep(
                kind=kind, arguments={"name": rest}, line=number
            ))
        elif kind == TraceFormat.CHECK:
            quantity, _, value = rest.partition(sep)
            if quantity not in ("h", "j") or not value.lstrip("-").isdigit():
                raise ScenarioError(
                    f"line {number}: expected check|h|<n> or check|j|<n>"
                )
            steps.append(TraceStep(
                kind=kind,
                arguments={"quantity": quantity, "value": int(value)},
                line=number,
            ))
        else:
            steps.append(parse_move(line, kind, rest, number))
    return steps


def parse_move(line: str, kind: str, rest: str, number: int) -> TraceStep:
    try:
        return TraceStep(kind=kind, arguments=json.loads(rest), line=number)
    except json.JSONDecodeError:
        pass
    try:
        record = MoveRecord.from_line(line)
    except ValueError as error:
        raise ScenarioError(f"line {number}: bad move line ({error})") from None
    return TraceStep(
        kind=kind,
        arguments=record.arguments,
        expected=(
            record.h_before,
            record.h_after,
            record.j_before,
            record.j_after,
        ),
        line=number,
    )


class TraceRepository(IRepository):
    """
    Repository of `.trace` scenario scripts.
    """

    extension = TraceFormat.EXTENSION

    def __init__(self, root=None) -> None:
        super().__init__(root)
        self.logger = logger

    def get(self, name: Union[str, Path]) -> List[TraceStep]:
        path = self.path_of(name)
        if not path.is_file():
            raise ScenarioError(f"unknown scenario '{name}'")
        self.logger.debug(f"loading trace {path}")
        return parse_trace(self.read_text(path))
