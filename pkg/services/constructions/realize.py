from dtos.knots import Atom, Cable, KnotExpr, KnotTable, Satellite, Sum
from dtos.splitting_complex import SplittingComplex
from errors.constructions import ConstructionError
from services.constructions.abstraction import IConstructionService
from services.constructions.circular import CircularSplittingService
from services.constructions.connected_sum import ConnectedSumService
from services.constructions.pattern import (
    CablePatternService,
    PatternSplittingService,
)
from services.constructions.satellite import SatelliteService
from services.evaluator.parse import summands


def half_of(upper, name: str) -> int:
    if upper is None:
        raise ConstructionError(f"'{name}' has no finite handle number")
    if upper % 2:
        raise ConstructionError(
            f"'{name}' has odd handle number {upper}; circular splittings "
            f"of knot exteriors have even handle number"
        )
    return upper // 2


class RealizeService(IConstructionService):
    """
    Build a circular splitting realizing the upper bound of an expression
    from the table: atoms become one-level splittings with handle number
    equal to their upper bound, and sums, cables and satellites use the
    corresponding constructions.
    """

    def __init__(self) -> None:
        super().__init__()
        self.circular = CircularSplittingService()
        self.connected_sum = ConnectedSumService()
        self.cable_pattern = CablePatternService()
        self.pattern = PatternSplittingService()
        self.satellite = SatelliteService()

    def run(self, expr: KnotExpr, table: KnotTable) -> SplittingComplex:
        if isinstance(expr, Atom):
            record = table.knots.get(expr.name)
            if record is None:
                raise ConstructionError(f"unknown knot '{expr.name}'")
            return self.circular.run(1, 1 + half_of(record.h.upper, expr.name))

        if isinstance(expr, Sum):
            terms = summands(expr)
            complex_ = self.run(terms[0], table)
            for term in terms[1:]:
                complex_ = self.connected_sum.run(
                    complex_, self.run(term, table)
                )
            return complex_

        if isinstance(expr, Cable):
            return self.satellite.run(
                self.cable_pattern.run(expr.p, expr.q),
                self.run(expr.inner, table),
                expr.p,
            )

        if isinstance(expr, Satellite):
            record = table.patterns.get(expr.pattern)
            if record is None:
                raise ConstructionError(f"unknown pattern '{expr.pattern}'")
            if record.winding != expr.winding:
                raise ConstructionError(
                    f"pattern '{expr.pattern}' has winding {record.winding}, "
                    f"not {expr.winding}"
                )
            pattern = self.pattern.run(
                1,
                1 + half_of(record.h.upper, expr.pattern),
                expr.winding,
            )
            return self.satellite.run(
                pattern,
                self.run(expr.inner, table),
                expr.winding,
            )

        raise ConstructionError(f"unsupported expression {expr!r}")
