"""
DTOs for knot expressions, handle-number values and the base-knot table.
"""
from math import gcd
from typing import Dict, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class HandleValue(BaseModel):
    """
    Exact value or proven interval for a handle number. `upper` is None
    when no finite upper bound is known.
    """
    model_config = ConfigDict(frozen=True)

    lower: int = Field(..., ge=0, description="Proven lower bound.")
    upper: Optional[int] = Field(
        None, ge=0, description="Proven upper bound, None for infinity."
    )

    @model_validator(mode="after")
    def check_order(self) -> "HandleValue":
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(
                f"lower bound {self.lower} exceeds upper bound {self.upper}"
            )
        return self

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @classmethod
    def of(cls, value: int) -> "HandleValue":
        return cls(lower=value, upper=value)

    def __add__(self, other: "HandleValue") -> "HandleValue":
        upper = None
        if self.upper is not None and other.upper is not None:
            upper = self.upper + other.upper
        return HandleValue(lower=self.lower + other.lower, upper=upper)


class Atom(BaseModel):
    model_config = ConfigDict(frozen=True)

    node: Literal["atom"] = "atom"
    name: str = Field(..., min_length=1, description="Table name, e.g. 3_1.")


class Sum(BaseModel):
    model_config = ConfigDict(frozen=True)

    node: Literal["sum"] = "sum"
    left: "KnotExpr" = Field(..., description="First summand.")
    right: "KnotExpr" = Field(..., description="Second summand.")


class Cable(BaseModel):
    """
    The (p, q)-cable of `inner`; requires p >= 1, q != 0 and
    gcd(p, q) = 1.
    """
    model_config = ConfigDict(frozen=True)

    node: Literal["cable"] = "cable"
    p: int = Field(..., description="Winding of the cable pattern.")
    q: int = Field(..., description="Twisting of the cable pattern.")
    inner: "KnotExpr" = Field(..., description="Companion knot.")

    @model_validator(mode="after")
    def check_parameters(self) -> "Cable":
        if self.p < 1:
            raise ValueError(f"cable needs p >= 1, got p={self.p}")
        if self.q == 0:
            raise ValueError("cable needs q != 0")
        if gcd(self.p, self.q) != 1:
            raise ValueError(
                f"cable parameters p={self.p}, q={self.q} are not coprime"
            )
        return self


class Satellite(BaseModel):
    model_config = ConfigDict(frozen=True)

    node: Literal["satellite"] = "satellite"
    pattern: str = Field(..., min_length=1, description="Pattern name.")
    winding: int = Field(..., description="Winding number of the pattern.")
    inner: "KnotExpr" = Field(..., description="Companion knot.")

    @model_validator(mode="after")
    def check_winding(self) -> "Satellite":
        if self.winding < 1:
            raise ValueError(
                f"satellite needs winding >= 1, got {self.winding}"
            )
        return self


KnotExpr = Union[Atom, Sum, Cable, Satellite]

Sum.model_rebuild()
Cable.model_rebuild()
Satellite.model_rebuild()


class KnotRecord(BaseModel):
    """
    A base-knot fact. Fibered knots have handle number exactly 0.
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Knot name.")
    fibered: bool = Field(..., description="Whether the knot is fibered.")
    h: HandleValue = Field(..., description="Handle number value.")
    source: str = Field("", description="Citation for the fact.")

    @model_validator(mode="after")
    def check_fibered(self) -> "KnotRecord":
        if self.fibered and not (self.h.exact and self.h.lower == 0):
            raise ValueError(f"fibered knot '{self.name}' must have h = 0")
        return self


class PatternRecord(KnotRecord):
    """
    A pattern fact; only non-zero winding numbers are admitted.
    """

    winding: int = Field(..., ge=1, description="Winding number.")


class KnotTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    knots: Dict[str, KnotRecord] = Field(
        default_factory=dict, description="Knot records by name."
    )
    patterns: Dict[str, PatternRecord] = Field(
        default_factory=dict, description="Pattern records by name."
    )


class ProvenanceEntry(BaseModel):
    """
    One node of an evaluation trace: where in the expression, which rule
    produced the value and the supporting detail.
    """
    model_config = ConfigDict(frozen=True)

    path: str = Field(..., description="Node path, e.g. `0.1`.")
    rule: str = Field(..., description="Rule applied at the node.")
    detail: str = Field("", description="Expression text or table source.")
    value: HandleValue = Field(..., description="Value at the node.")


class Evaluation(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: HandleValue = Field(..., description="Value of the expression.")
    provenance: Tuple[ProvenanceEntry, ...] = Field(
        default_factory=tuple, description="Trace, root first."
    )
