from itertools import count

from constants.topology import BodyLabel, Topology
from dtos.moves import MoveOutcome
from dtos.splitting_complex import SplittingComplex
from services.compression_body.factory import body_of
from services.compression_body.handles import is_trivial
from services.moves.abstraction import IMoveService
from services.moves.rewire import drop_keys, other_bodies


class InflateService(IMoveService):
    """
    Insert a product layer at a thin surface R: one thick copy T and one
    thin copy R' separated by two trivial bodies. The A-body that met R
    now meets R', so h and j are unchanged.
    """

    kind = "inflate"

    def run(self, complex_: SplittingComplex, thin: str) -> MoveOutcome:
        component = complex_.component(thin)
        if component is None or component not in complex_.thin:
            raise self.fail(f"'{thin}' is not a thin surface", thin=thin)
        a_bodies = complex_.bodies_meeting(thin, BodyLabel.A)
        if len(a_bodies) != 1:
            raise self.fail(f"'{thin}' meets {len(a_bodies)} A-bodies")
        outer = a_bodies[0]

        used = {item.key for item in complex_.components()}
        for index in count(1):
            thick_key = f"{thin}{Topology.INFLATE_THICK}{index}"
            copy_key = f"{thin}{Topology.INFLATE_THIN}{index}"
            if thick_key not in used and copy_key not in used:
                break

        layer = component.model_copy(update={"key": thick_key, "tag": None})
        copy = component.renamed(copy_key)
        rewired = outer.model_copy(update={
            "minus": tuple(
                copy if item.key == thin else item for item in outer.minus
            ),
        })

        result = complex_.model_copy(update={
            "thin": (*complex_.thin, copy),
            "thick": (*complex_.thick, layer),
            "bodies": (
                *other_bodies(complex_, [outer]),
                rewired,
                body_of(BodyLabel.A, layer, [component]),
                body_of(BodyLabel.B, layer, [copy]),
            ),
        })
        self.logger.debug(f"inflated {thin} into {thick_key} and {copy_key}")
        return self.outcome(complex_, result, {"thin": thin})


class DeflateService(IMoveService):
    """
    Remove a product layer: a thick T bounding two trivial bodies over
    thin X (A side) and thin Y (B side). T and Y disappear and the A-body
    that met Y meets X instead. Exact inverse of inflation.
    """

    kind = "deflate"

    def run(self, complex_: SplittingComplex, thick: str) -> MoveOutcome:
        upper = complex_.body(thick, BodyLabel.A)
        lower = complex_.body(thick, BodyLabel.B)
        if upper is None or lower is None:
            raise self.fail(f"'{thick}' is not a thick surface with bodies")
        if not (is_trivial(upper) and is_trivial(lower)):
            raise self.fail(
                f"'{thick}' does not bound two trivial bodies", thick=thick
            )
        kept, dropped = upper.minus[0], lower.minus[0]
        if kept.key == dropped.key:
            raise self.fail(
                f"'{thick}' bounds the same surface on both sides",
                thick=thick,
            )
        if dropped not in complex_.thin:
            raise self.fail(
                f"'{dropped.key}' below '{thick}' is not thin", thick=thick
            )
        if kept.shape() != dropped.shape():
            raise self.fail(
                f"'{kept.key}' and '{dropped.key}' differ", thick=thick
            )
        neighbours = complex_.bodies_meeting(dropped.key, BodyLabel.A)
        if len(neighbours) != 1:
            raise self.fail(
                f"'{dropped.key}' meets {len(neighbours)} A-bodies"
            )
        neighbour = neighbours[0]
        rewired = neighbour.model_copy(update={
            "minus": tuple(
                kept if item.key == dropped.key else item
                for item in neighbour.minus
            ),
        })

        result = complex_.model_copy(update={
            "thin": tuple(drop_keys(complex_.thin, {dropped.key})),
            "thick": tuple(drop_keys(complex_.thick, {thick})),
            "bodies": (
                *other_bodies(complex_, [upper, lower, neighbour]),
                rewired,
            ),
        })
        self.logger.debug(f"deflated {thick}, merging {dropped.key} into {kept.key}")
        return self.outcome(complex_, result, {"thick": thick})
