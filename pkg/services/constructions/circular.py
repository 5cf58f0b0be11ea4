from constants.topology import BodyLabel, SutureKind, Topology
from dtos.splitting_complex import SplittingComplex
from dtos.surface import SurfaceComponent, Suture
from errors.constructions import ConstructionError
from services.complex.canonical import assemble
from services.compression_body.factory import body_of
from services.constructions.abstraction import IConstructionService


class CircularSplittingService(IConstructionService):
    """
    Circular splitting of a knot exterior with a single thin Seifert
    surface R of genus `genus_thin` and a single thick surface S of genus
    `genus_thick`, both bodies running from S down to R. Its handle number
    is 2 * (genus_thick - genus_thin).
    """

    def run(self, genus_thin: int, genus_thick: int) -> SplittingComplex:
        if genus_thin < 0:
            raise ConstructionError(f"negative thin genus {genus_thin}")
        if genus_thick < genus_thin:
            raise ConstructionError(
                f"thick genus {genus_thick} is below thin genus {genus_thin}"
            )
        boundary = {Topology.KNOT_SUTURE: 1}
        thin = SurfaceComponent(
            key=Topology.THIN_KEY, genus=genus_thin, boundary=boundary
        )
        thick = SurfaceComponent(
            key=Topology.THICK_KEY, genus=genus_thick, boundary=boundary
        )
        self.logger.debug(
            f"circular splitting R genus {genus_thin}, S genus {genus_thick}"
        )
        return self.checked(assemble(
            sutures=[Suture(id=Topology.KNOT_SUTURE, kind=SutureKind.TOROIDAL)],
            thin=[thin],
            thick=[thick],
            bodies=[
                body_of(BodyLabel.A, thick, [thin]),
                body_of(BodyLabel.B, thick, [thin]),
            ],
        ))
