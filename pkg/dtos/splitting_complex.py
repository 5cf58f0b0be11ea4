"""
DTOs for (circular) generalized Heegaard splittings.
"""
from typing import Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from constants.topology import Assumption, BodyLabel, SurfaceRole
from dtos.compression_body import CompressionBody
from dtos.surface import SurfaceComponent, Suture


class SplittingComplex(BaseModel):
    """
    Incidence structure of thin and thick surfaces, the boundary surfaces
    R+ and R- of the ambient sutured manifold, its sutures, and the A/B
    labelled compression bodies between them. Incidence is carried by the
    bodies: a body's plus is a thick key and its minus keys are thin or
    boundary keys.
    """
    model_config = ConfigDict(frozen=True)

    sutures: Tuple[Suture, ...] = Field(
        default_factory=tuple, description="Sutures of the manifold."
    )
    thin: Tuple[SurfaceComponent, ...] = Field(
        default_factory=tuple, description="Thin surface components."
    )
    thick: Tuple[SurfaceComponent, ...] = Field(
        default_factory=tuple, description="Thick surface components."
    )
    boundary_plus: Tuple[SurfaceComponent, ...] = Field(
        default_factory=tuple, description="R+ components."
    )
    boundary_minus: Tuple[SurfaceComponent, ...] = Field(
        default_factory=tuple, description="R- components."
    )
    bodies: Tuple[CompressionBody, ...] = Field(
        default_factory=tuple, description="Compression bodies."
    )
    assumptions: FrozenSet[Assumption] = Field(
        default_factory=frozenset,
        description="Unverified geometric annotations.",
    )

    def role_map(self) -> Dict[SurfaceRole, Tuple[SurfaceComponent, ...]]:
        return {
            SurfaceRole.THIN: self.thin,
            SurfaceRole.THICK: self.thick,
            SurfaceRole.PLUS: self.boundary_plus,
            SurfaceRole.MINUS: self.boundary_minus,
        }

    def components(self) -> List[SurfaceComponent]:
        return [
            *self.thin,
            *self.thick,
            *self.boundary_plus,
            *self.boundary_minus,
        ]

    def component(self, key: str) -> Optional[SurfaceComponent]:
        for component in self.components():
            if component.key == key:
                return component
        return None

    def role_of(self, key: str) -> Optional[SurfaceRole]:
        for role, components in self.role_map().items():
            if any(component.key == key for component in components):
                return role
        return None

    def body(self, thick_key: str, label: BodyLabel) -> Optional[
        CompressionBody
    ]:
        for body in self.bodies:
            if body.plus.key == thick_key and body.label == label:
                return body
        return None

    def bodies_meeting(
        self,
        key: str,
        label: BodyLabel,
    ) -> List[CompressionBody]:
        """
        Bodies with the given label having `key` in their negative
        boundary.
        """
        return [
            body for body in self.bodies
            if body.label == label and key in body.minus_keys()
        ]


class Violation(BaseModel):
    """
    One failed validity check.
    """
    model_config = ConfigDict(frozen=True)

    code: str = Field(..., description="Stable machine-readable code.")
    subject: str = Field(..., description="Key of the offending object.")
    message: str = Field(..., description="Human readable explanation.")

    def __str__(self) -> str:
        return f"{self.code} [{self.subject}]: {self.message}"


class Census(BaseModel):
    """
    Body census of a complex.
    """
    model_config = ConfigDict(frozen=True)

    bodies: int = Field(..., description="Number of bodies.")
    trivial: int = Field(..., description="Number of product bodies.")
    handlebodies: int = Field(..., description="Number of handlebodies.")
    handle_number: int = Field(..., description="Total handle number.")
    handle_index: int = Field(..., description="Total handle index.")
