"""
DTOs describing rewrite moves, their outcomes and provenance records.
"""
import json
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from constants.formats import TraceFormat
from dtos.splitting_complex import SplittingComplex
from dtos.surface import ArcSurgery, DiskSurgery, Key, Suture


class WeakReductionMove(BaseModel):
    """
    Explicit data of a weak reduction along one thick component S.

    The A-side disks produce S1, the B-side disks produce S2 and the B-side
    disks applied to S1 produce the new thin surface R. Disk targets use the
    lineage keys of S (`S`, `S.0`, ...). Partition maps are keyed by the
    lineage keys of S1 / S2 and list the negative boundary of each new
    body: old keys for the outer bodies A1 / B2, lineage keys of R for the
    inner bodies B1 / A2.
    """
    model_config = ConfigDict(frozen=True)

    thick: str = Field(..., description="Key of the thick component S.")
    disks_a: Tuple[DiskSurgery, ...] = Field(
        ..., min_length=1, description="Compressing disks on the A side."
    )
    disks_b: Tuple[DiskSurgery, ...] = Field(
        ..., min_length=1, description="Compressing disks on the B side."
    )
    disks_b_on_s1: Optional[Tuple[DiskSurgery, ...]] = Field(
        None,
        description="B-side disks re-expressed on S1; defaults to disks_b.",
    )
    a1_minus: Optional[Dict[str, List[str]]] = Field(
        None, description="S1 lineage key -> old A negative boundary keys."
    )
    b1_minus: Optional[Dict[str, List[str]]] = Field(
        None, description="S1 lineage key -> R lineage keys."
    )
    a2_minus: Optional[Dict[str, List[str]]] = Field(
        None, description="S2 lineage key -> R lineage keys."
    )
    b2_minus: Optional[Dict[str, List[str]]] = Field(
        None, description="S2 lineage key -> old B negative boundary keys."
    )
    label: Key = Field("w", description="Key prefix.")
    rename: Dict[str, Key] = Field(
        default_factory=dict,
        description="Generated key -> custom key for new components.",
    )
    maximal: bool = Field(
        False, description="Asserts the new thin surface is incompressible."
    )


class RectanglePlan(BaseModel):
    """
    Vertical rectangles of the chopping annulus inside one body and the
    bodies the chop leaves behind.
    """
    model_config = ConfigDict(frozen=True)

    count: int = Field(..., ge=0, description="Number of rectangles.")
    minus_sides: Dict[str, int] = Field(
        default_factory=dict,
        description="Rectangle sides per negative boundary component.",
    )
    bodies: Tuple["ChopBody", ...] = Field(
        default_factory=tuple,
        description="Bodies after the chop, keyed by final surface keys.",
    )


class ChopBody(BaseModel):
    model_config = ConfigDict(frozen=True)

    plus: str = Field(..., description="Final key of the positive boundary.")
    minus: Tuple[str, ...] = Field(
        default_factory=tuple, description="Final negative boundary keys."
    )


class ChopMove(BaseModel):
    """
    Chop of a complex along an annulus meeting every compression body in
    vertical rectangles.
    """
    model_config = ConfigDict(frozen=True)

    new_sutures: Tuple[Suture, ...] = Field(
        default_factory=tuple, description="Sutures created by the chop."
    )
    arcs: Dict[str, Tuple[ArcSurgery, ...]] = Field(
        default_factory=dict,
        description="Component key -> arcs cut in it, in order.",
    )
    rename: Dict[str, Key] = Field(
        default_factory=dict, description="Lineage key -> final key."
    )
    rectangles: Dict[str, RectanglePlan] = Field(
        default_factory=dict, description="Body key -> rectangle plan."
    )
    pieces: Dict[str, Tuple[str, ...]] = Field(
        default_factory=dict,
        description="Piece label -> final surface keys it contains.",
    )


class ChopResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    complex: SplittingComplex = Field(..., description="The chopped whole.")
    pieces: Dict[str, SplittingComplex] = Field(
        default_factory=dict, description="Sub-complexes by piece label."
    )


class MoveRecord(BaseModel):
    """
    Provenance of one applied move.
    """
    model_config = ConfigDict(frozen=True)

    kind: str = Field(..., description="Move name.")
    arguments: Dict[str, Any] = Field(
        default_factory=dict, description="JSON-compatible arguments."
    )
    h_before: int = Field(..., description="Total handle number before.")
    h_after: int = Field(..., description="Total handle number after.")
    j_before: int = Field(..., description="Total handle index before.")
    j_after: int = Field(..., description="Total handle index after.")

    def to_line(self) -> str:
        payload = json.dumps(
            self.arguments, sort_keys=True, separators=(",", ":")
        )
        return TraceFormat.SEPARATOR.join([
            self.kind,
            payload,
            str(self.h_before),
            str(self.h_after),
            str(self.j_before),
            str(self.j_after),
        ])

    @classmethod
    def from_line(cls, line: str) -> "MoveRecord":
        kind, rest = line.split(TraceFormat.SEPARATOR, 1)
        payload, h_before, h_after, j_before, j_after = rest.rsplit(
            TraceFormat.SEPARATOR, 4
        )
        return cls(
            kind=kind,
            arguments=json.loads(payload),
            h_before=int(h_before),
            h_after=int(h_after),
            j_before=int(j_before),
            j_after=int(j_after),
        )


class MoveOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    complex: SplittingComplex = Field(..., description="Resulting complex.")
    record: MoveRecord = Field(..., description="Provenance record.")


RectanglePlan.model_rebuild()
