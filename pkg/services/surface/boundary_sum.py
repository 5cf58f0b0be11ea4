from collections import Counter
from typing import Optional

from dtos.surface import SurfaceComponent
from errors.surface import SurgeryError
from services.surface.abstraction import ISurfaceService

from start_utils import logger


class BoundarySumService(ISurfaceService):
    """
    Boundary connected sum of two components along an arc of a common
    suture: genera add and the two circles on that suture fuse into one.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(
        self,
        first: SurfaceComponent,
        second: SurfaceComponent,
        suture: str,
        key: Optional[str] = None,
    ) -> SurfaceComponent:
        for component in (first, second):
            if component.boundary.get(suture, 0) < 1:
                raise SurgeryError(
                    f"boundary sum needs a circle of '{component.key}' "
                    f"on suture '{suture}'"
                )

        boundary = Counter(first.boundary) + Counter(second.boundary)
        boundary[suture] -= 1
        result = SurfaceComponent(
            key=key or first.key,
            genus=first.genus + second.genus,
            boundary=dict(boundary),
            tag=first.tag,
        )
        self.logger.debug(
            f"boundary sum {first.key} + {second.key} on {suture}: "
            f"genus {result.genus}, boundary {result.boundary}"
        )
        return result
