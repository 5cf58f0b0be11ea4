from typing import Tuple

from constants.topology import BodyLabel, Topology
from dtos.splitting_complex import SplittingComplex
from dtos.surface import SurfaceComponent
from errors.constructions import ConstructionError
from services.complex.canonical import assemble
from services.complex.census import is_circular
from services.compression_body.factory import body_of
from services.constructions.abstraction import IConstructionService
from services.surface.boundary_sum import BoundarySumService


def single_level(
    complex_: SplittingComplex,
    name: str,
) -> Tuple[SurfaceComponent, SurfaceComponent]:
    """
    The thin and thick surface of a one-level circular splitting.
    """
    if not is_circular(complex_):
        raise ConstructionError(f"{name} is not a circular knot splitting")
    if len(complex_.thin) != 1 or len(complex_.thick) != 1:
        raise ConstructionError(
            f"{name} must have one thin and one thick surface, has "
            f"{len(complex_.thin)} and {len(complex_.thick)}"
        )
    suture = complex_.sutures[0].id
    thin, thick = complex_.thin[0], complex_.thick[0]
    for component in (thin, thick):
        if component.boundary.get(suture, 0) != 1:
            raise ConstructionError(
                f"{name}: '{component.key}' must meet the knot in one circle"
            )
    return thin, thick


def on_suture(component: SurfaceComponent, suture: str, key: str):
    return SurfaceComponent(
        key=key,
        genus=component.genus,
        boundary={suture: component.boundary_total},
    )


class ConnectedSumService(IConstructionService):
    """
    Circular splitting of K_a # K_b from one-level splittings of the
    summands: R = R_a boundary-summed with R_b, S = S_a with S_b. Handle
    number and handle index are exactly additive.
    """

    def __init__(self) -> None:
        super().__init__()
        self.boundary_sum = BoundarySumService()

    def run(
        self,
        first: SplittingComplex,
        second: SplittingComplex,
    ) -> SplittingComplex:
        thin_a, thick_a = single_level(first, "first summand")
        thin_b, thick_b = single_level(second, "second summand")
        suture = first.sutures[0]

        thin = self.boundary_sum.run(
            on_suture(thin_a, suture.id, Topology.THIN_KEY),
            on_suture(thin_b, suture.id, Topology.THIN_KEY),
            suture.id,
        )
        thick = self.boundary_sum.run(
            on_suture(thick_a, suture.id, Topology.THICK_KEY),
            on_suture(thick_b, suture.id, Topology.THICK_KEY),
            suture.id,
        )
        self.logger.debug(
            f"connected sum: R genus {thin.genus}, S genus {thick.genus}"
        )
        return self.checked(assemble(
            sutures=[suture],
            thin=[thin],
            thick=[thick],
            bodies=[
                body_of(BodyLabel.A, thick, [thin]),
                body_of(BodyLabel.B, thick, [thin]),
            ],
        ))
