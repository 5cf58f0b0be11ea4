from typing import List

from constants.topology import BodyLabel, SutureKind, Topology
from dtos.splitting_complex import SplittingComplex
from dtos.surface import SurfaceComponent, Suture
from errors.constructions import ConstructionError
from errors.moves import MoveError
from errors.surface import SurgeryError
from services.complex.canonical import assemble
from services.compression_body.factory import body_of
from services.constructions.abstraction import IConstructionService
from services.constructions.connected_sum import single_level
from services.moves.inflate import InflateService
from services.surface.glue import GlueService

COMPANION_COPY = f"{Topology.COMPANION_SUTURE}~K"


def pattern_level(pattern: SplittingComplex, winding: int):
    ids = {suture.id for suture in pattern.sutures}
    if ids != {Topology.KNOT_SUTURE, Topology.COMPANION_SUTURE}:
        raise ConstructionError(
            f"pattern sutures must be k and c, got {sorted(ids)}"
        )
    if len(pattern.thin) != 1 or len(pattern.thick) != 1:
        raise ConstructionError(
            "pattern must have one thin and one thick surface"
        )
    if pattern.boundary_plus or pattern.boundary_minus:
        raise ConstructionError("pattern must have empty R+ and R-")
    thin, thick = pattern.thin[0], pattern.thick[0]
    for component in (thin, thick):
        if component.boundary.get(Topology.COMPANION_SUTURE, 0) != winding:
            raise ConstructionError(
                f"winding mismatch: '{component.key}' meets c "
                f"{component.boundary.get(Topology.COMPANION_SUTURE, 0)} "
                f"times, expected {winding}"
            )
        if component.boundary.get(Topology.KNOT_SUTURE, 0) != 1:
            raise ConstructionError(
                f"'{component.key}' must meet the pattern knot once"
            )
    return thin, thick


class SatelliteService(IConstructionService):
    """
    Circular splitting of the satellite P(K) with winding n. The knot
    splitting is inflated n - 1 times so it has n parallel thin copies of
    R_K; these are glued to the n circles of R_P on the c suture, and the
    thick surfaces are glued to S_P the same way:

        h(P(K)) <= h(P) + h(K)

    holds with equality for the complex built here.
    """

    def __init__(self) -> None:
        super().__init__()
        self.inflate = InflateService()
        self.glue = GlueService()

    def run(
        self,
        pattern: SplittingComplex,
        knot: SplittingComplex,
        winding: int,
    ) -> SplittingComplex:
        if winding < 1:
            raise ConstructionError(
                f"satellites need a positive winding number, got {winding}"
            )
        pattern_thin, pattern_thick = pattern_level(pattern, winding)
        single_level(knot, "companion")
        knot_suture = knot.sutures[0].id

        inflated = knot
        try:
            for _ in range(winding - 1):
                inflated = self.inflate.run(
                    inflated, knot.thin[0].key
                ).complex
        except MoveError as error:
            raise ConstructionError(error.message) from error

        def companion(components) -> List[SurfaceComponent]:
            return [
                component.model_copy(update={
                    "boundary": {COMPANION_COPY: component.boundary_total},
                })
                for component in components
            ]

        pairs = [(Topology.COMPANION_SUTURE, COMPANION_COPY)]
        try:
            thin = self.glue.run(
                [pattern_thin, *companion(inflated.thin)],
                pairs,
                Topology.THIN_KEY,
            )
            thick = self.glue.run(
                [pattern_thick, *companion(inflated.thick)],
                pairs,
                Topology.THICK_KEY,
            )
        except SurgeryError as error:
            raise ConstructionError(error.message) from error
        self.logger.debug(
            f"satellite with winding {winding} over suture {knot_suture}: "
            f"R genus {thin.genus}, S genus {thick.genus}"
        )
        return self.checked(assemble(
            sutures=[
                Suture(id=Topology.KNOT_SUTURE, kind=SutureKind.TOROIDAL)
            ],
            thin=[thin],
            thick=[thick],
            bodies=[
                body_of(BodyLabel.A, thick, [thin]),
                body_of(BodyLabel.B, thick, [thin]),
            ],
        ))
