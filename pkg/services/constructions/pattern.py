from math import gcd

from constants.topology import BodyLabel, SutureKind, Topology
from dtos.splitting_complex import SplittingComplex
from dtos.surface import SurfaceComponent, Suture
from errors.constructions import ConstructionError
from services.complex.canonical import assemble
from services.compression_body.factory import body_of
from services.constructions.abstraction import IConstructionService


class PatternSplittingService(IConstructionService):
    """
    Circular splitting of a pattern P in a solid torus V: the exterior of
    the pattern knot k in V carries a thin surface R_P (a Seifert surface
    of k punctured by the core c) and a thick surface S_P, both meeting
    the k suture once and the c suture `winding` times.
    """

    def run(
        self,
        genus_thin: int,
        genus_thick: int,
        winding: int,
    ) -> SplittingComplex:
        if winding < 1:
            raise ConstructionError(
                f"patterns need a positive winding number, got {winding}"
            )
        if genus_thin < 0 or genus_thick < genus_thin:
            raise ConstructionError(
                f"bad pattern genera: thin {genus_thin}, thick {genus_thick}"
            )
        boundary = {
            Topology.KNOT_SUTURE: 1,
            Topology.COMPANION_SUTURE: winding,
        }
        thin = SurfaceComponent(
            key=Topology.THIN_KEY, genus=genus_thin, boundary=boundary
        )
        thick = SurfaceComponent(
            key=Topology.THICK_KEY, genus=genus_thick, boundary=boundary
        )
        return self.checked(assemble(
            sutures=[
                Suture(id=Topology.KNOT_SUTURE, kind=SutureKind.TOROIDAL),
                Suture(id=Topology.COMPANION_SUTURE, kind=SutureKind.TOROIDAL),
            ],
            thin=[thin],
            thick=[thick],
            bodies=[
                body_of(BodyLabel.A, thick, [thin]),
                body_of(BodyLabel.B, thick, [thin]),
            ],
        ))


class CablePatternService(IConstructionService):
    """
    Fibration of the (p, q) cable pattern. The fiber is a torus-knot fiber
    of genus (p - 1)(|q| - 1) / 2 meeting the core of the complementary
    solid torus in p points; both bodies are products.
    """

    def __init__(self) -> None:
        super().__init__()
        self.patterns = PatternSplittingService()

    def run(self, p: int, q: int) -> SplittingComplex:
        if p < 1:
            raise ConstructionError(f"cable needs p >= 1, got p={p}")
        if q == 0:
            raise ConstructionError("cable needs q != 0")
        if gcd(p, q) != 1:
            raise ConstructionError(
                f"cable parameters p={p}, q={q} are not coprime"
            )
        genus = (p - 1) * (abs(q) - 1) // 2
        self.logger.debug(f"cable pattern ({p},{q}) fiber genus {genus}")
        return self.patterns.run(genus, genus, p)
