"""
DTOs for scripted scenario traces and their replay reports.
"""
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class TraceStep(BaseModel):
    """
    One line of a `.trace` script.
    Fields:
        kind (str): `start`, `assume`, `piece`, `check` or a move name.
        arguments (Dict[str, Any]): Move arguments or step operands.
        expected (Optional[Tuple[int, int, int, int]]): h/j before and
        after, when the line is a full move record.
        line (int): 1-based line number in the script.
    """
    model_config = ConfigDict(frozen=True)

    kind: str = Field(..., description="Step kind.")
    arguments: Dict[str, Any] = Field(
        default_factory=dict, description="Step operands."
    )
    expected: Optional[Tuple[int, int, int, int]] = Field(
        None, description="Recorded h_before, h_after, j_before, j_after."
    )
    line: int = Field(..., ge=1, description="Line number.")


class ScenarioReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Scenario name.")
    lines: Tuple[str, ...] = Field(
        default_factory=tuple, description="Replay log, one line per step."
    )
    failures: Tuple[str, ...] = Field(
        default_factory=tuple, description="Failed assertions."
    )
    records: Tuple[str, ...] = Field(
        default_factory=tuple,
        description="MoveRecord line of every replayed move, in order.",
    )

    @property
    def passed(self) -> bool:
        return not self.failures
