from typing import Iterable

from constants.topology import ArcKind, Topology
from dtos.surface import ArcSurgery, Surface, SurfaceComponent, SurgeryResult
from errors.surface import SurgeryError
from services.surface.abstraction import ISurfaceService
from services.surface.lineage import (
    compose_lineage,
    identity_lineage,
    result_of,
)

from start_utils import logger


class ArcSurgeryService(ISurfaceService):
    """
    Cuts of surface components along properly embedded arcs. Every cut
    raises the Euler characteristic by exactly 1. Circles may be moved to
    other sutures by the cut, so only circle totals are constrained.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(self, surface: Surface, surgery: ArcSurgery) -> SurgeryResult:
        target = surface.get(surgery.target)
        if target is None:
            raise SurgeryError(
                f"arc surgery targets unknown component '{surgery.target}'"
            )
        total = target.boundary_total

        if surgery.kind in (
            ArcKind.JOIN_TWO_CIRCLES,
            ArcKind.SAME_CIRCLE_NON_SEPARATING,
        ):
            if surgery.boundary is None:
                raise SurgeryError(
                    f"arc cut of '{target.key}' needs its resulting boundary"
                )
            if surgery.kind == ArcKind.JOIN_TWO_CIRCLES:
                if total < 2:
                    raise SurgeryError(
                        f"joining arc on '{target.key}' needs two circles"
                    )
                genus, expected = target.genus, total - 1
            else:
                if target.genus < 1 or total < 1:
                    raise SurgeryError(
                        f"non-separating arc on '{target.key}' needs genus "
                        f">= 1 and a boundary circle"
                    )
                genus, expected = target.genus - 1, total + 1
            cut = SurfaceComponent(
                key=target.key,
                genus=genus,
                boundary=surgery.boundary,
                tag=target.tag,
            )
            if cut.boundary_total != expected:
                raise SurgeryError(
                    f"arc cut of '{target.key}' must leave {expected} "
                    f"circles, got {cut.boundary_total}"
                )
            return result_of(surface, target.key, [cut])

        if surgery.left is None or surgery.right is None:
            raise SurgeryError(
                f"separating arc on '{target.key}' needs both sides"
            )
        left, right = surgery.left, surgery.right
        if total < 1:
            raise SurgeryError(f"arc on closed component '{target.key}'")
        if left.genus + right.genus != target.genus:
            raise SurgeryError(
                f"separating arc on '{target.key}' splits genus "
                f"{target.genus} into {left.genus} + {right.genus}"
            )
        if left.boundary_total + right.boundary_total != total + 1:
            raise SurgeryError(
                f"separating arc on '{target.key}' must leave "
                f"{total + 1} circles in total"
            )
        if left.boundary_total < 1 or right.boundary_total < 1:
            raise SurgeryError(
                f"each side of an arc cut of '{target.key}' keeps a circle"
            )

        left_key = surgery.left_key or f"{target.key}{Topology.LEFT_SUFFIX}"
        right_key = surgery.right_key or f"{target.key}{Topology.RIGHT_SUFFIX}"
        replacements = [
            SurfaceComponent(
                key=left_key,
                genus=left.genus,
                boundary=left.boundary,
                tag=target.tag,
            ),
            SurfaceComponent(
                key=right_key,
                genus=right.genus,
                boundary=right.boundary,
                tag=target.tag,
            ),
        ]
        clashes = set(surface.keys()) - {target.key}
        if left_key == right_key or {left_key, right_key} & clashes:
            raise SurgeryError(
                f"arc cut of '{target.key}' reuses an existing id"
            )
        return result_of(surface, target.key, replacements)

    def run_all(
        self,
        surface: Surface,
        surgeries: Iterable[ArcSurgery],
    ) -> SurgeryResult:
        lineage = identity_lineage(surface)
        for surgery in surgeries:
            step = self.run(surface, surgery)
            surface = step.surface
            lineage = compose_lineage(lineage, step.lineage)
        return SurgeryResult(surface=surface, lineage=lineage)
