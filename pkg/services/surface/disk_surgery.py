from collections import Counter
from typing import Iterable

from constants.topology import DiskKind, Topology
from dtos.surface import (
    DiskSurgery,
    Surface,
    SurfaceComponent,
    SurgeryResult,
)
from errors.surface import SurgeryError
from services.surface.abstraction import ISurfaceService
from services.surface.lineage import (
    compose_lineage,
    identity_lineage,
    result_of,
)

from start_utils import logger


class DiskSurgeryService(ISurfaceService):
    """
    Compression of surface components along disks. A compression raises
    the Euler characteristic by exactly 2 and never changes circle counts.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(self, surface: Surface, surgery: DiskSurgery) -> SurgeryResult:
        target = surface.get(surgery.target)
        if target is None:
            raise SurgeryError(
                f"disk surgery targets unknown component '{surgery.target}'"
            )

        if surgery.kind == DiskKind.NON_SEPARATING:
            if target.genus < 1:
                raise SurgeryError(
                    f"non-separating compression of '{target.key}' needs "
                    f"genus >= 1, got {target.genus}"
                )
            compressed = target.model_copy(update={"genus": target.genus - 1})
            if compressed.is_sphere:
                raise SurgeryError(
                    f"compressing '{target.key}' creates a sphere"
                )
            return result_of(surface, target.key, [compressed])

        if surgery.left is None or surgery.right is None:
            raise SurgeryError(
                f"separating compression of '{target.key}' needs both sides"
            )
        left, right = surgery.left, surgery.right
        if left.genus + right.genus != target.genus:
            raise SurgeryError(
                f"separating compression of '{target.key}' splits genus "
                f"{target.genus} into {left.genus} + {right.genus}"
            )
        merged = Counter(left.boundary) + Counter(right.boundary)
        if dict(merged) != target.boundary:
            raise SurgeryError(
                f"separating compression of '{target.key}' does not "
                f"partition its boundary {target.boundary}"
            )
        if left.is_sphere or right.is_sphere:
            raise SurgeryError(
                f"compressing '{target.key}' creates a sphere"
            )

        left_key = surgery.left_key or f"{target.key}{Topology.LEFT_SUFFIX}"
        right_key = surgery.right_key or f"{target.key}{Topology.RIGHT_SUFFIX}"
        if left_key == right_key:
            raise SurgeryError(f"both sides of '{target.key}' named {left_key}")
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
        for component in replacements:
            if component.key in clashes:
                raise SurgeryError(f"duplicate id '{component.key}'")
        return result_of(surface, target.key, replacements)

    def run_all(
        self,
        surface: Surface,
        surgeries: Iterable[DiskSurgery],
    ) -> SurgeryResult:
        """
        Apply surgeries in order; later targets may name keys produced by
        earlier ones. The lineage maps the original keys to the final ones.
        """
        lineage = identity_lineage(surface)
        for surgery in surgeries:
            step = self.run(surface, surgery)
            surface = step.surface
            lineage = compose_lineage(lineage, step.lineage)
        return SurgeryResult(surface=surface, lineage=lineage)
