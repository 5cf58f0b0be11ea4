from collections import Counter
from typing import Iterable, List, Optional, Sequence, Tuple

from dtos.surface import SurfaceComponent
from errors.surface import SurgeryError
from services.surface.abstraction import ISurfaceService

from start_utils import logger


class GlueService(ISurfaceService):
    """
    Glue a family of components into one connected component by pairing
    every circle on one suture of a pair with a circle on the other.

    Gluing along circles is additive in Euler characteristic, so the
    genus of the result is recovered from the remaining boundary.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(
        self,
        components: Iterable[SurfaceComponent],
        pairs: Sequence[Tuple[str, str]],
        key: str,
        tag: Optional[str] = None,
    ) -> SurfaceComponent:
        pieces: List[SurfaceComponent] = list(components)
        if not pieces:
            raise SurgeryError("nothing to glue")

        euler = sum(piece.euler_char for piece in pieces)
        boundary: Counter = Counter()
        for piece in pieces:
            boundary.update(piece.boundary)

        for first, second in pairs:
            if first == second:
                if boundary[first] % 2:
                    raise SurgeryError(
                        f"cannot pair an odd number of circles on '{first}'"
                    )
                del boundary[first]
                continue
            if boundary[first] != boundary[second]:
                raise SurgeryError(
                    f"cannot pair {boundary[first]} circles on '{first}' "
                    f"with {boundary[second]} circles on '{second}'"
                )
            del boundary[first]
            del boundary[second]

        remaining = sum(boundary.values())
        doubled_genus = 2 - euler - remaining
        if doubled_genus < 0 or doubled_genus % 2:
            raise SurgeryError(
                f"gluing into '{key}' is not a connected surface "
                f"(euler {euler}, {remaining} circles)"
            )
        glued = SurfaceComponent(
            key=key,
            genus=doubled_genus // 2,
            boundary=dict(boundary),
            tag=tag,
        )
        if glued.is_sphere:
            raise SurgeryError(f"gluing into '{key}' creates a sphere")
        self.logger.debug(
            f"glued {len(pieces)} pieces into {key}: genus {glued.genus}, "
            f"boundary {glued.boundary}"
        )
        return glued
