"""
DTO for connected compression-body nodes.
"""
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field

from constants.topology import BodyLabel, Topology
from dtos.surface import SurfaceComponent


class CompressionBody(BaseModel):
    """
    A connected compression body W. Surfaces are held by value; the
    splitting complex checks they agree with its own components.
    Fields:
        label (BodyLabel): A or B side.
        plus (SurfaceComponent): The connected positive boundary.
        minus (Tuple[SurfaceComponent, ...]): Negative boundary, possibly
        empty (handlebody).
        pairing (Dict[str, int]): Vertical annuli per suture.
    """
    model_config = ConfigDict(frozen=True)

    label: BodyLabel = Field(..., description="Side of the thick surface.")
    plus: SurfaceComponent = Field(..., description="Positive boundary.")
    minus: Tuple[SurfaceComponent, ...] = Field(
        default_factory=tuple,
        description="Negative boundary components.",
    )
    pairing: Dict[str, int] = Field(
        default_factory=dict,
        description="Count of vertical annuli per suture.",
    )

    @property
    def key(self) -> str:
        return f"{self.plus.key}{Topology.BODY_SEPARATOR}{self.label.value}"

    def minus_keys(self) -> Tuple[str, ...]:
        return tuple(component.key for component in self.minus)
