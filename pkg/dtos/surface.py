"""
Abstract surfaces: connected pieces described by genus and circle counts
per suture, and the surgery descriptions that act on them.
"""
from typing import Annotated, Dict, List, Optional, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    StringConstraints,
    field_validator,
)

from constants.topology import ArcKind, DiskKind, SutureKind, Topology

Key = Annotated[str, StringConstraints(pattern=Topology.KEY_PATTERN)]


def normalize_boundary(boundary: Dict[str, int]) -> Dict[str, int]:
    """
    Drop zero counts and order the map by suture id so equal boundaries
    compare and serialize identically.
    """
    for suture, count in boundary.items():
        if count < 0:
            raise ValueError(
                f"negative circle count {count} on suture '{suture}'"
            )
    return {
        suture: boundary[suture]
        for suture in sorted(boundary)
        if boundary[suture] > 0
    }


class Suture(BaseModel):
    """
    A suture of the ambient sutured manifold.
    """
    model_config = ConfigDict(frozen=True)

    id: Key = Field(..., description="Opaque suture id.")
    kind: SutureKind = Field(
        SutureKind.TOROIDAL,
        description="Annular sutures join R+ to R-; toroidal ones are tori.",
    )


class Shape(BaseModel):
    """
    Genus and per-suture boundary of a connected piece, without identity.
    Used to describe the outcome of a surgery.
    """
    model_config = ConfigDict(frozen=True)

    genus: int = Field(..., ge=0, description="Genus of the piece.")
    boundary: Dict[str, int] = Field(
        default_factory=dict,
        description="Circle count per suture id.",
    )

    @field_validator("boundary")
    @classmethod
    def normalize(cls, value: Dict[str, int]) -> Dict[str, int]:
        return normalize_boundary(value)

    @property
    def boundary_total(self) -> int:
        return sum(self.boundary.values())

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus - self.boundary_total

    @property
    def is_sphere(self) -> bool:
        return self.genus == 0 and self.boundary_total == 0


class SurfaceComponent(Shape):
    """
    A connected compact orientable surface with its circles sitting on
    named sutures. `key` is the stable lineage key used by moves to rewire
    incidence.
    """

    key: Key = Field(..., description="Stable lineage key.")
    tag: Optional[Key] = Field(
        None,
        description="Optional co-orientation symbol for thin surfaces.",
    )

    def shape(self) -> Shape:
        return Shape(genus=self.genus, boundary=self.boundary)

    def renamed(self, key: str) -> "SurfaceComponent":
        return self.model_copy(update={"key": key})


class Surface(BaseModel):
    """
    A formal, possibly disconnected, union of surface components.
    """
    model_config = ConfigDict(frozen=True)

    components: Tuple[SurfaceComponent, ...] = Field(
        default_factory=tuple,
        description="Components in stable order.",
    )

    def keys(self) -> List[str]:
        return [component.key for component in self.components]

    def get(self, key: str) -> Optional[SurfaceComponent]:
        for component in self.components:
            if component.key == key:
                return component
        return None


class DiskSurgery(BaseModel):
    """
    Compression of one component along a disk. A separating disk states
    the two sides; lineage keys of the sides default to `<target>.0` and
    `<target>.1`.
    """
    model_config = ConfigDict(frozen=True)

    target: str = Field(..., description="Key of the compressed component.")
    kind: DiskKind = Field(
        DiskKind.NON_SEPARATING,
        description="Whether the disk boundary separates the component.",
    )
    left: Optional[Shape] = Field(
        None, description="First side of a separating compression."
    )
    right: Optional[Shape] = Field(
        None, description="Second side of a separating compression."
    )
    left_key: Optional[Key] = Field(None, description="Key of the left side.")
    right_key: Optional[Key] = Field(
        None, description="Key of the right side."
    )


class ArcSurgery(BaseModel):
    """
    Cut of one component along a properly embedded arc. Join and
    non-separating cuts state the resulting boundary map (circles may move
    to new sutures); separating cuts state both sides.
    """
    model_config = ConfigDict(frozen=True)

    target: str = Field(..., description="Key of the cut component.")
    kind: ArcKind = Field(..., description="How the arc meets the boundary.")
    boundary: Optional[Dict[str, int]] = Field(
        None,
        description="Resulting boundary for join / non-separating cuts.",
    )
    left: Optional[Shape] = Field(
        None, description="First side of a separating cut."
    )
    right: Optional[Shape] = Field(
        None, description="Second side of a separating cut."
    )
    left_key: Optional[Key] = Field(None, description="Key of the left side.")
    right_key: Optional[Key] = Field(
        None, description="Key of the right side."
    )

    @field_validator("boundary")
    @classmethod
    def normalize(
        cls,
        value: Optional[Dict[str, int]],
    ) -> Optional[Dict[str, int]]:
        return None if value is None else normalize_boundary(value)


class SurgeryResult(BaseModel):
    """
    A surgered surface together with the lineage of its components.
    """
    model_config = ConfigDict(frozen=True)

    surface: Surface = Field(..., description="The resulting surface.")
    lineage: Dict[str, Tuple[str, ...]] = Field(
        ...,
        description="Old component key to the keys it became.",
    )
