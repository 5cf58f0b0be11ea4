"""
DTOs for invariant fuzzing results.
"""
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field


class TrialResult(BaseModel):
    """
    Outcome of one fuzz trial.
    Fields:
        index (int): Trial number.
        origin (str): Description of the seed complex.
        applied (Dict[str, int]): Successful moves per kind.
        rejected (Dict[str, int]): Moves refused by their preconditions.
        handlebody (bool): Whether a handlebody body was ever seen.
        violations (Tuple[str, ...]): Broken invariants.
    """
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0, description="Trial number.")
    origin: str = Field(..., description="Seed complex description.")
    applied: Dict[str, int] = Field(default_factory=dict)
    rejected: Dict[str, int] = Field(default_factory=dict)
    handlebody: bool = Field(False, description="Saw a handlebody body.")
    round_trips: int = Field(0, ge=0, description="Round trips checked.")
    violations: Tuple[str, ...] = Field(default_factory=tuple)


class FuzzReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    trials: int = Field(..., ge=0)
    seed: int = Field(..., ge=0)
    max_moves: int = Field(..., ge=0)
    applied: Dict[str, int] = Field(default_factory=dict)
    rejected: Dict[str, int] = Field(default_factory=dict)
    handlebody_trials: int = Field(0, ge=0)
    round_trips: int = Field(0, ge=0)
    violations: Tuple[str, ...] = Field(default_factory=tuple)

    def to_text(self) -> str:
        lines = [
            f"trials: {self.trials}",
            f"seed: {self.seed}",
            f"max moves: {self.max_moves}",
            f"trials with handlebodies: {self.handlebody_trials}",
            f"round trips: {self.round_trips}",
        ]
        for kind in sorted(set(self.applied) | set(self.rejected)):
            lines.append(
                f"{kind}: applied {self.applied.get(kind, 0)}, "
                f"rejected {self.rejected.get(kind, 0)}"
            )
        lines.append(f"violations: {len(self.violations)}")
        lines.extend(f"  {violation}" for violation in self.violations)
        return "\n".join(lines) + "\n"
